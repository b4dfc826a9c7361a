#include "precise.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace ucube::detail {

namespace {

class Float {
 public:
  Float() { mpfr_init2(v_, kLogPrecisionBits); }
  explicit Float(const Rational& q) : Float() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Float(const Float&) = delete;
  Float& operator=(const Float&) = delete;
  ~Float() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }

  Rational to_rational() {
    Rational out;
    mpfr_get_q(out.get_mpq_t(), v_);
    return out;
  }

 private:
  mpfr_t v_;
};

void check_argument(const Rational& argument) {
  if (argument <= 0 || argument == 1) throw std::domain_error("logarithm argument must be positive and != 1");
}

}  // namespace

Rational ratio_over_log(const Rational& numerator, const Rational& argument) {
  check_argument(argument);
  Float num(numerator);
  Float arg(argument);
  Float out;
  mpfr_log(arg.get(), arg.get(), MPFR_RNDN);
  mpfr_div(out.get(), num.get(), arg.get(), MPFR_RNDN);
  return out.to_rational();
}

Rational ratio_over_log2(const Rational& numerator, const Rational& argument) {
  check_argument(argument);
  Float num(numerator);
  Float arg(argument);
  Float out;
  mpfr_log2(arg.get(), arg.get(), MPFR_RNDN);
  mpfr_div(out.get(), num.get(), arg.get(), MPFR_RNDN);
  return out.to_rational();
}

}  // namespace ucube::detail
