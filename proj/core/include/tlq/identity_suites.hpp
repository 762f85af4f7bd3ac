#pragma once

#include "tlq/report.hpp"

namespace tlq {

/**
 * Exact checks of the q-number and U_q identities the construction relies on:
 * products of q-integers, the two alternating summations, q-Lucas asymptotics
 * for p <= 5, the weight shift of ladder powers, the S_k S_l structure
 * constants, commutation of the S_r and their diagonal action on descents.
 * Matrix identities run for every n <= max_n.
 */
CheckList identity_suites(int max_n);

}  // namespace tlq
