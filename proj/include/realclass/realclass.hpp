#pragma once

#include "realclass/permutation.hpp"
#include "realclass/number_theory.hpp"
#include "realclass/group.hpp"
#include "realclass/structure.hpp"
#include "realclass/real_classes.hpp"
#include "realclass/prime_graph.hpp"
#include "realclass/verify.hpp"
#include "realclass/families.hpp"
#include "realclass/group_file.hpp"
#include "realclass/corpus.hpp"
#include "realclass/report.hpp"
