#pragma once

#include "qgc/bigint.hpp"
#include "qgc/decomposition.hpp"
#include "qgc/dihedral.hpp"
#include "qgc/entropy.hpp"
#include "qgc/experiments.hpp"
#include "qgc/field.hpp"
#include "qgc/group.hpp"
#include "qgc/group_algebra.hpp"
#include "qgc/linear_code.hpp"
#include "qgc/matrix.hpp"
#include "qgc/probability.hpp"
#include "qgc/quasi.hpp"
#include "qgc/report.hpp"
#include "qgc/rng.hpp"
#include "qgc/search_n.hpp"
#include "qgc/selfdual.hpp"
#include "qgc/splitting.hpp"
