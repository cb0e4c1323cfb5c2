#pragma once

#include <array>
#include <cstdint>

namespace isospec {

/// The eight unit quaternions {±1, ±i, ±j, ±k}.
enum class Q8Element : std::uint8_t {
  one, minus_one, i, minus_i, j, minus_j, k, minus_k
};

constexpr std::array<Q8Element, 8> q8_elements() {
  return {Q8Element::one, Q8Element::minus_one, Q8Element::i, Q8Element::minus_i,
          Q8Element::j, Q8Element::minus_j, Q8Element::k, Q8Element::minus_k};
}

/// Quaternion product: i*j = k, j*i = -k, i^2 = j^2 = k^2 = -1.
Q8Element q8_multiply(Q8Element g, Q8Element h);
Q8Element q8_inverse(Q8Element g);
const char* to_string(Q8Element g);

/// The three nontrivial line bundles over the generic leaf, indexed by the
/// order-4 subgroup of Q8 their sections are blind to.
enum class Bundle : int { eta1 = 1, eta2 = 2, eta3 = 3 };

/// Sign character of the bundle: +1 on {±1} and the bundle's own axis pair
/// (eta1 on ±i, eta2 on ±j, eta3 on ±k), -1 on the other four elements.
/// Each is a homomorphism Q8 -> {±1} whose kernel is an order-4 subgroup.
int character(Bundle bundle, Q8Element g);

}  // namespace isospec
