#include "kuc/rational.hpp"

namespace kuc {

std::string to_decimal_string(const Rational& q, unsigned digits) {
    Integer scale = integer_pow(Integer(10), digits);
    Integer num = q.get_num() * scale;
    Integer den = q.get_den();
    // round half away from zero
    Integer quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer scaled = quot;
    if (2 * abs(rem) >= den) scaled += (sgn(num) < 0 ? -1 : 1);

    bool neg = sgn(scaled) < 0;
    Integer mag = abs(scaled);
    std::string s = mag.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (neg) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

}  // namespace kuc
