#pragma once

#include "bihom/rational.hpp"
#include "bihom/report.hpp"
#include "bihom/matrix.hpp"
#include "bihom/product.hpp"
#include "bihom/algebra.hpp"
#include "bihom/representation.hpp"
#include "bihom/operators.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/deformation.hpp"
#include "bihom/io.hpp"
