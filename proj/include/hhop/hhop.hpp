#pragma once

// Umbrella header for the operator inequality verification library.

#include "hhop/errors.hpp"
#include "hhop/estimates.hpp"
#include "hhop/eta_map.hpp"
#include "hhop/functional_calculus.hpp"
#include "hhop/hermitian_matrix.hpp"
#include "hhop/hh_chain.hpp"
#include "hhop/invexity_checks.hpp"
#include "hhop/jacobi_eigen.hpp"
#include "hhop/matrix_io.hpp"
#include "hhop/operator_integral.hpp"
#include "hhop/operator_set.hpp"
#include "hhop/preinvexity.hpp"
#include "hhop/quadrature.hpp"
#include "hhop/random_sampling.hpp"
#include "hhop/report_io.hpp"
#include "hhop/scalar_function.hpp"
#include "hhop/scalar_oracles.hpp"
#include "hhop/suites.hpp"
