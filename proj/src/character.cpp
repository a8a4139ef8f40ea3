#include "symzero/character.hpp"

#include <string>

#include "symzero/errors.hpp"

namespace symzero {

TermBag::TermBag(const BoundaryCode& shape, int weight) : weight_(weight) { terms_.emplace(shape, CharValue(1)); }

void TermBag::add(BoundaryCode shape, const CharValue& coefficient, int sign) {
  auto it = terms_.try_emplace(std::move(shape)).first;
  if (sign > 0) {
    it->second += coefficient;
  } else {
    it->second -= coefficient;
  }
  if (sgn(it->second) == 0) terms_.erase(it);
}

TermBag TermBag::peel(int part) const {
  TermBag next;
  next.weight_ = weight_ - part;
  next.terms_.reserve(terms_.size() * 2);
  for (const auto& [shape, coefficient] : terms_) {
    for_each_rim_hook(shape, part, [&](BoundaryCode&& removed, int sign) {
      next.add(std::move(removed), coefficient, sign);
    });
  }
  return next;
}

CharValue TermBag::finish() const {
  CharValue total = 0;
  for (const auto& [shape, coefficient] : terms_) total += coefficient * dimension(shape);
  return total;
}

namespace {

void check_weights(int lambda_weight, const Partition& mu) {
  if (lambda_weight != mu.weight()) {
    throw WeightMismatch("lambda has weight " + std::to_string(lambda_weight) + " but mu has weight " +
                         std::to_string(mu.weight()));
  }
}

}  // namespace

CharValue character(const BoundaryCode& lambda, const Partition& mu) {
  const BoundaryCode start = lambda.normalized();
  check_weights(decode(start).weight(), mu);
  TermBag bag(start, mu.weight());
  for (int part : mu.parts()) {
    if (part == 1) break;
    bag = bag.peel(part);
    if (bag.empty()) return 0;
  }
  return bag.finish();
}

CharValue character(const Partition& lambda, const Partition& mu) {
  check_weights(lambda.weight(), mu);
  return character(encode(lambda), mu);
}

ZeroClass classify(const BoundaryCode& lambda, const Partition& mu, bool evaluate) {
  ZeroClass z;
  if (mu.empty()) {
    check_weights(decode(lambda).weight(), mu);
  } else {
    z.is_type1 = is_t_core(lambda, mu[0]);
    z.is_type2 = z.is_type1;
    int previous = mu[0];
    for (std::size_t k = 1; k < mu.length() && !z.is_type2; ++k) {
      if (mu[k] == previous) continue;
      previous = mu[k];
      z.is_type2 = is_t_core(lambda, mu[k]);
    }
  }
  if (z.is_type2) {
    z.is_zero = true;
    z.evaluated = evaluate;
    if (evaluate) check_weights(decode(lambda).weight(), mu);
    return z;
  }
  if (evaluate) {
    z.is_zero = sgn(character(lambda, mu)) == 0;
    z.evaluated = true;
  }
  return z;
}

ZeroClass classify(const Partition& lambda, const Partition& mu, bool evaluate) {
  check_weights(lambda.weight(), mu);
  return classify(encode(lambda), mu, evaluate);
}

}  // namespace symzero
