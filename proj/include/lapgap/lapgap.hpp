/**
 * Umbrella header for the lapgap library.
 */

#ifndef LAPGAP_LAPGAP_HPP
#define LAPGAP_LAPGAP_HPP

#include "error.hpp"
#include "simplex.hpp"
#include "complex.hpp"
#include "facet_io.hpp"
#include "operators.hpp"
#include "spectral.hpp"
#include "bounds.hpp"
#include "isomorphism.hpp"
#include "extremal.hpp"
#include "probe.hpp"
#include "expression.hpp"
#include "report.hpp"

#endif
