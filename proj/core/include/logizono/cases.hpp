#pragma once

#include <cstddef>
#include <cstdint>

#include "logizono/model.hpp"

namespace logizono {

/// Four vehicles at an intersection. p_i: vehicle i is passing, c_i: it
/// came first; inputs up_i, uc_i are the decisions to pass and to come
/// first.
///
///   p_i' = up_i & !p_i & !c_i
///   c_i' = !p_i' & (uc_i | (!p_i & p_i'))
///
/// p1 = c1 = 1 and p3 = c3 = 0 initially, p2, p4, c2, c4 in {0,1};
/// up2 = up4 = 0, every other input in {0,1}.
Model intersection_model();

/// Three 10-bit states B1..B3 and inputs U1..U3:
///
///   B1' = U1 | XNOR(B2, B1)
///   B2' = XNOR(B2, B1 & U2)
///   B3' = NAND(B3, XNOR(U2, U3))
///
/// Every initial set and every per-step input set holds two distinct
/// values drawn from mt19937_64(seed). Input sets are drawn for
/// `input_steps` steps; the last repeats after that.
Model boolean10_model(std::uint64_t seed, std::size_t input_steps = 64);

}  // namespace logizono
