#include "lensband/linkform.hpp"

#include <numeric>
#include <stdexcept>

#include "lensband/numtheory.hpp"

namespace lensband {

namespace {

LinkingForm make_form(std::int64_t p, std::int64_t q) {
  if (p < 1) throw std::invalid_argument("LinkingForm: order must be >= 1");
  if (p == 1) return {1, 0};
  q = mod_reduce(q, p);
  if (std::gcd(q, p) != 1) throw std::invalid_argument("LinkingForm: gcd(q,p) must be 1");
  return {p, q};
}

}  // namespace

LinkingForm filling_linking_form(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("filling_linking_form: n must be nonzero");
  std::int64_t a = n < 0 ? -n : n;
  std::int64_t k = 0;
  switch (a % 3) {
    case 1:
      k = (a - 1) / 3;
      break;
    case 2:
      k = (a + 1) / 3;
      break;
    default:
      throw std::invalid_argument(
          "filling_linking_form: |n| = 0 (mod 3) has no homologically essential filling");
  }
  return make_form(a, k);
}

LinkingForm target_linking_form(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("target_linking_form: n must be nonzero");
  std::int64_t a = n < 0 ? -n : n;
  return make_form(a, n > 0 ? 1 : a - 1);
}

bool linking_forms_equivalent(const LinkingForm& f, const LinkingForm& g) {
  if (f.p != g.p) return false;
  return square_equivalent(f.q, g.q, f.p);
}

}  // namespace lensband
