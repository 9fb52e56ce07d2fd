#include "aluffi/ring.hpp"

#include "aluffi/errors.hpp"
#include "aluffi/monomial.hpp"

namespace aluffi {

PolyRing::PolyRing(std::size_t num_vars, TermOrder order) : num_vars_(num_vars), order_(order) {
  if (num_vars == 0 || num_vars > kMaxVars)
    throw PreconditionError("ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
  if (order.kind() == TermOrder::Kind::elimination && (order.block() == 0 || order.block() >= num_vars))
    throw PreconditionError("elimination block must be a proper nonempty prefix of the variables");
}

}  // namespace aluffi
