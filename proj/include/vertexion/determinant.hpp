#pragma once

#include <vector>

#include "vertexion/scalar.hpp"

namespace vertexion {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/*
 * Determinant by fraction-free (Bareiss) elimination.
 *
 * Each step computes (m_ij * pivot - m_ik * m_kj) / previous_pivot, and that
 * division is exact. Zero pivots are handled by a row swap; a column without
 * a nonzero pivot means the determinant is 0.
 */
Scalar bareiss_determinant(ScalarMatrix m);

}  // namespace vertexion
