#ifndef SUBPOW_SUBPOW_HPP
#define SUBPOW_SUBPOW_HPP

#include "cycle_structure.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "format.hpp"
#include "oracle.hpp"
#include "subset.hpp"
#include "subset_power.hpp"

#endif // SUBPOW_SUBPOW_HPP
