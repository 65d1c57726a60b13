#ifndef RICBOUNDS_HPP
#define RICBOUNDS_HPP

#include "ricbounds/asymptotic_bounds.hpp"
#include "ricbounds/combinations.hpp"
#include "ricbounds/empirical_ric.hpp"
#include "ricbounds/errors.hpp"
#include "ricbounds/grid_point.hpp"
#include "ricbounds/implicit_bounds.hpp"
#include "ricbounds/jacobi.hpp"
#include "ricbounds/lemmas.hpp"
#include "ricbounds/matrix.hpp"
#include "ricbounds/parallel.hpp"
#include "ricbounds/proof_checks.hpp"
#include "ricbounds/reports.hpp"
#include "ricbounds/ric_pair.hpp"
#include "ricbounds/rng.hpp"
#include "ricbounds/root_finding.hpp"
#include "ricbounds/sampling_theorems.hpp"
#include "ricbounds/scalar_kernels.hpp"

#endif  // RICBOUNDS_HPP
