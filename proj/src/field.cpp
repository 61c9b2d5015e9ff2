#include "moddef/field.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "moddef/errors.hpp"

namespace moddef {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class modulus(std::to_string(p), 10);
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
    return std::stoull(r.get_str());
}

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p < 2 || p >= kMaxModulus)
        throw InputError("prime modulus " + std::to_string(p) + " is out of range [2, 2^62)");
    mpz_class z(std::to_string(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw InputError("modulus " + std::to_string(p) + " is not prime");
    return Field{p};
}

Field Field::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.size() > 2 && text.substr(0, 2) == "F_" && is_digits(text.substr(2))) {
        std::uint64_t p = 0;
        auto digits = text.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{}) throw InputError("prime modulus too large: " + std::string(text));
        return prime(p);
    }
    throw InputError("unknown field '" + std::string(text) + "' (expected \"Q\" or \"F_<p>\")");
}

std::string Field::name() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(modulus_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
    if (is_rational()) return Scalar(mpq_class(value));
    auto magnitude = static_cast<std::uint64_t>(value < 0 ? -(value + 1) : value) + (value < 0 ? 1 : 0);
    std::uint64_t r = magnitude % modulus_;
    if (value < 0 && r != 0) r = modulus_ - r;
    return Scalar(Scalar::Residue{r, modulus_});
}

Scalar Field::from_rational(const mpq_class& value) const {
    if (is_rational()) {
        mpq_class v = value;
        v.canonicalize();
        return Scalar(std::move(v));
    }
    std::uint64_t den = reduce(value.get_den(), modulus_);
    if (den == 0)
        throw InputError("denominator " + value.get_den().get_str() + " vanishes in " + name());
    std::uint64_t num = reduce(value.get_num(), modulus_);
    return Scalar(Scalar::Residue{mul_mod(num, pow_mod(den, modulus_ - 2, modulus_), modulus_), modulus_});
}

Scalar Field::parse_scalar(std::string_view text) const {
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    auto unsigned_num = !num.empty() && num.front() == '-' ? num.substr(1) : num;
    if (!is_digits(unsigned_num) || (slash != std::string_view::npos && !is_digits(den)))
        throw InputError("bad scalar syntax '" + std::string(text) + "' (expected \"p/q\" or \"n\")");
    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in scalar '" + std::string(text) + "'");
    return from_rational(mpq_class(n, d));
}

Field Scalar::field() const noexcept {
    if (auto* r = std::get_if<Residue>(&value_)) return Field::prime_unchecked(r->modulus);
    return Field{};
}

bool Scalar::is_zero() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<Residue>(value_).value == 1;
}

std::string Scalar::to_string() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<Residue>(value_).value);
}

void Scalar::require_same_field(const Scalar& other) const {
    if (value_.index() != other.value_.index() ||
        (value_.index() == 1 && std::get<Residue>(value_).modulus != std::get<Residue>(other.value_).modulus))
        throw std::logic_error("arithmetic between scalars of different fields");
}

Scalar Scalar::operator-() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
    auto r = std::get<Residue>(value_);
    return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q += std::get<mpq_class>(rhs.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        std::uint64_t s = r.value + std::get<Residue>(rhs.value_).value;
        r.value = s >= r.modulus ? s - r.modulus : s;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q -= std::get<mpq_class>(rhs.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        std::uint64_t b = std::get<Residue>(rhs.value_).value;
        r.value = r.value >= b ? r.value - b : r.value + (r.modulus - b);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q *= std::get<mpq_class>(rhs.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        r.value = mul_mod(r.value, std::get<Residue>(rhs.value_).value, r.modulus);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(1 / *q));
    auto r = std::get<Residue>(value_);
    return Scalar(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

void Scalar::subtract_product(const Scalar& factor, const Scalar& rhs) {
    require_same_field(rhs);
    require_same_field(factor);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q -= std::get<mpq_class>(factor.value_) * std::get<mpq_class>(rhs.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        std::uint64_t prod = mul_mod(std::get<Residue>(factor.value_).value,
                                     std::get<Residue>(rhs.value_).value, r.modulus);
        r.value = r.value >= prod ? r.value - prod : r.value + (r.modulus - prod);
    }
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.value_.index() != rhs.value_.index()) return false;
    if (auto* q = std::get_if<mpq_class>(&lhs.value_)) return *q == std::get<mpq_class>(rhs.value_);
    return std::get<Scalar::Residue>(lhs.value_) == std::get<Scalar::Residue>(rhs.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace moddef
