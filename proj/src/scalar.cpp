#include <whq/scalar.hpp>

#include <charconv>

namespace whq {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// Extended Euclid; p prime, 0 < a < p.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::str() const {
    return kind == FieldKind::rationals ? "rationals" : "prime " + std::to_string(modulus);
}

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::rationals)
        s.q_ = 1;
    else
        s.r_ = 1 % f.modulus;
    return s;
}

Scalar Scalar::of_int(const FieldSpec& f, long long n) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::rationals) {
        s.q_ = static_cast<long>(n);
    } else {
        long long m = n % static_cast<long long>(f.modulus);
        if (m < 0) m += static_cast<long long>(f.modulus);
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::of_fraction(long long num, long long den) {
    if (den == 0) throw Error("zero denominator");
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::of_residue(const FieldSpec& f, std::uint64_t r) {
    if (f.kind != FieldKind::prime) throw Error("of_residue requires a prime field");
    Scalar s;
    s.field_ = f;
    s.r_ = r % f.modulus;
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
    std::string_view t = trim(text);
    if (t.empty()) throw Error("empty scalar");
    if (f.kind == FieldKind::rationals) {
        std::string owned(t);
        try {
            mpq_class q(owned, 10);
            q.canonicalize();
            Scalar s;
            s.field_ = f;
            s.q_ = q;
            return s;
        } catch (const std::invalid_argument&) {
            throw Error("invalid rational scalar: '" + owned + "'");
        }
    }
    // prime field: "r" or "r mod p"
    auto pos = t.find("mod");
    if (pos != std::string_view::npos) {
        std::uint64_t p = parse_u64(trim(t.substr(pos + 3)), "modulus");
        if (p != f.modulus)
            throw Error("scalar modulus " + std::to_string(p) + " does not match field " + f.str());
        t = trim(t.substr(0, pos));
    }
    bool neg = false;
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
        neg = t.front() == '-';
        t.remove_prefix(1);
    }
    std::uint64_t r = parse_u64(t, "residue") % f.modulus;
    if (neg && r != 0) r = f.modulus - r;
    return of_residue(f, r);
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::rationals ? q_ == 1 : r_ == 1 % field_.modulus;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatchError(field_.str(), o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::rationals) {
        s.q_ = q_ + o.q_;
    } else {
        std::uint64_t v = r_ + o.r_; // p < 2^63, no overflow
        s.r_ = v >= field_.modulus ? v - field_.modulus : v;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::rationals) {
        s.q_ = q_ - o.q_;
    } else {
        s.r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + field_.modulus - o.r_;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::rationals)
        s.q_ = q_ * o.q_;
    else
        s.r_ = mulmod_u64(r_, o.r_, field_.modulus);
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::rationals)
        s.q_ = 1 / q_;
    else
        s.r_ = invmod_u64(r_, field_.modulus);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::rationals)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.modulus - r_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.kind == FieldKind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::rationals) return q_.get_str();
    return std::to_string(r_) + " mod " + std::to_string(field_.modulus);
}

const mpq_class& Scalar::rational() const {
    if (field_.kind != FieldKind::rationals) throw Error("scalar is not rational");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (field_.kind != FieldKind::prime) throw Error("scalar is not a residue");
    return r_;
}

} // namespace whq
