#pragma once

#include "gencat/combinatorics.hpp"
#include "gencat/dyck.hpp"
#include "gencat/errors.hpp"
#include "gencat/int_polynomial.hpp"
#include "gencat/jacobi.hpp"
#include "gencat/monte_carlo.hpp"
#include "gencat/pair_partition.hpp"
#include "gencat/secular.hpp"
#include "gencat/similarity.hpp"
#include "gencat/symmetric_eigen.hpp"
#include "gencat/tolerances.hpp"
#include "gencat/weyl.hpp"
#include "gencat/wigner.hpp"
