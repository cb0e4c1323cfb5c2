#include "isospec/q8.hpp"

#include <stdexcept>

namespace isospec {

namespace {

// Element = sign * axis with axes e, i, j, k.
struct SignedAxis {
  int sign;  // +1 or -1
  int axis;  // 0=e, 1=i, 2=j, 3=k
};

SignedAxis decompose(Q8Element g) {
  const auto v = static_cast<int>(g);
  return {v % 2 == 0 ? +1 : -1, v / 2};
}

Q8Element compose(SignedAxis s) {
  return static_cast<Q8Element>(2 * s.axis + (s.sign > 0 ? 0 : 1));
}

}  // namespace

Q8Element q8_multiply(Q8Element g, Q8Element h) {
  const SignedAxis a = decompose(g);
  const SignedAxis b = decompose(h);
  int sign = a.sign * b.sign;
  int axis;
  if (a.axis == 0) {
    axis = b.axis;
  } else if (b.axis == 0) {
    axis = a.axis;
  } else if (a.axis == b.axis) {
    axis = 0;
    sign = -sign;  // i^2 = j^2 = k^2 = -1
  } else {
    // {i,j,k} cyclic: i*j = k etc., anticyclic picks up a sign.
    axis = 6 - a.axis - b.axis;
    const bool cyclic = (b.axis - a.axis + 3) % 3 == 1;
    if (!cyclic) sign = -sign;
  }
  return compose({sign, axis});
}

Q8Element q8_inverse(Q8Element g) {
  const SignedAxis a = decompose(g);
  if (a.axis == 0) return g;          // (+-1)^-1 = +-1
  return compose({-a.sign, a.axis});  // i^-1 = -i
}

const char* to_string(Q8Element g) {
  switch (g) {
    case Q8Element::one: return "1";
    case Q8Element::minus_one: return "-1";
    case Q8Element::i: return "i";
    case Q8Element::minus_i: return "-i";
    case Q8Element::j: return "j";
    case Q8Element::minus_j: return "-j";
    case Q8Element::k: return "k";
    case Q8Element::minus_k: return "-k";
  }
  throw std::invalid_argument("invalid Q8 element");
}

int character(Bundle bundle, Q8Element g) {
  const int axis = decompose(g).axis;
  if (axis == 0) return +1;
  return axis == static_cast<int>(bundle) ? +1 : -1;
}

}  // namespace isospec
