#include "frobcode/rational.hpp"

#include "frobcode/errors.hpp"

#include <limits>

namespace frobcode {

ParseError::ParseError(const std::string& what, std::size_t position, std::size_t line)
    : Error(line == 0 ? what + " (at offset " + std::to_string(position) + ")"
                      : what + " (line " + std::to_string(line) + ", offset " + std::to_string(position) + ")"),
      message_(what),
      position_(position),
      line_(line) {}

mpz_class to_mpz(__int128 v) {
    const bool negative = v < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return negative ? mpz_class(-out) : out;
}

Rational::Rational(long long v) : q_(to_mpz(v), 1) {}

Rational::Rational(unsigned long long v) : q_(static_cast<unsigned long>(v)) {
    static_assert(sizeof(unsigned long) == sizeof(unsigned long long));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long long num, long long den) : Rational(to_mpz(num), to_mpz(den)) {}

Rational Rational::from_int128(__int128 num, __int128 den) { return Rational(to_mpz(num), to_mpz(den)); }

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw ParseError("not a rational: '" + text + "'", 0);
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + text + "'", 0);
    q.canonicalize();
    return Rational(q);
}

long long Rational::to_integer() const {
    if (!is_integer()) throw InconsistencyError("expected an integer, got " + to_string());
    const mpz_class& n = q_.get_num();
    if (!n.fits_slong_p()) throw InconsistencyError("integer out of range: " + to_string());
    return n.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

}  // namespace frobcode
