#pragma once

#include "buchi/explicit_gba.hpp"
#include "buchi/provider.hpp"
#include "buchi/verdict.hpp"

namespace buchi {

/// Ground-truth emptiness: decomposes the reachable part into SCCs offline
/// and looks for a non-trivial SCC intersecting every acceptance set. The
/// verdict is independent of successor order. Counterexamples carry a lasso
/// assembled inside the witnessing SCC.
///
/// This path shares nothing with the on-the-fly checks it arbitrates.
Verdict oracle_emptiness(const ExplicitGBA& g);

/// Checks every lasso invariant through the provider: the prefix starts at
/// the initial state, consecutive states are edges, the loop closes, and the
/// loop visits a witness of every acceptance condition. The verdict must be a
/// counterexample (ContractError otherwise).
bool validate_lasso(AutomatonProvider& p, const Verdict& v);

}  // namespace buchi
