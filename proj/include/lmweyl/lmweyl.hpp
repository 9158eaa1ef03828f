#pragma once

#include <lmweyl/rational.hpp>
#include <lmweyl/poly.hpp>
#include <lmweyl/matrix.hpp>
#include <lmweyl/weyl.hpp>
#include <lmweyl/subspace.hpp>
#include <lmweyl/graded.hpp>
#include <lmweyl/invariants.hpp>
#include <lmweyl/report.hpp>
#include <lmweyl/catalog.hpp>
