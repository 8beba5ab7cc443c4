#include "keypoly/value_group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "keypoly/errors.hpp"

namespace keypoly {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

bool is_digit_string(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw ValidationError("empty rational literal");
    std::string_view body = s;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digit_string(num) || !is_digit_string(den)) {
        throw ValidationError("malformed rational literal '" + std::string(text) + "'");
    }
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    if (negative) q = -q;
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::strong_ordering compare_rationals(const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// RationalValue

const Rational& RationalValue::finite() const {
    if (!value_) throw ValidationError("infinite value has no finite part");
    return *value_;
}

RationalValue operator+(const RationalValue& a, const RationalValue& b) {
    if (a.is_infinite() || b.is_infinite()) return RationalValue::infinity();
    return RationalValue(Rational(*a.value_ + *b.value_));
}

std::strong_ordering operator<=>(const RationalValue& a, const RationalValue& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return compare_rationals(*a.value_, *b.value_);
}

std::string to_string(const RationalValue& v) {
    return v.is_infinite() ? std::string("inf") : to_string(v.finite());
}

// ---------------------------------------------------------------------------
// LambdaValue

LambdaValue::LambdaValue(Rational standard, Rational eps) : std_(std::move(standard)), eps_(std::move(eps)) {}

LambdaValue::LambdaValue(const RationalValue& v) {
    if (v.is_infinite()) {
        infinite_ = true;
    } else {
        std_ = v.finite();
    }
}

LambdaValue LambdaValue::infinity() {
    LambdaValue v;
    v.infinite_ = true;
    return v;
}

const Rational& LambdaValue::standard() const {
    if (infinite_) throw ValidationError("infinite value has no components");
    return std_;
}

const Rational& LambdaValue::eps() const {
    if (infinite_) throw ValidationError("infinite value has no components");
    return eps_;
}

LambdaValue LambdaValue::divided_by(std::int64_t s) const {
    if (infinite_) throw ValidationError("infinite value not divisible");
    if (s <= 0) throw ValidationError("divisor must be a positive integer");
    Rational d(static_cast<long>(s));
    return LambdaValue(std_ / d, eps_ / d);
}

LambdaValue operator+(const LambdaValue& a, const LambdaValue& b) {
    if (a.infinite_ || b.infinite_) return LambdaValue::infinity();
    return LambdaValue(a.std_ + b.std_, a.eps_ + b.eps_);
}

LambdaValue operator-(const LambdaValue& a, const LambdaValue& b) {
    if (b.infinite_) throw ValidationError("cannot subtract an infinite value");
    if (a.infinite_) return a;
    return LambdaValue(a.std_ - b.std_, a.eps_ - b.eps_);
}

LambdaValue operator*(std::int64_t n, const LambdaValue& a) {
    if (a.infinite_) {
        if (n == 0) return LambdaValue();
        if (n < 0) throw ValidationError("negative multiple of infinity");
        return a;
    }
    if (n == 0) return LambdaValue();
    if (n == 1) return a;
    Rational k(static_cast<long>(n));
    return LambdaValue(k * a.std_, k * a.eps_);
}

std::strong_ordering operator<=>(const LambdaValue& a, const LambdaValue& b) {
    if (a.infinite_ || b.infinite_) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    auto c = compare_rationals(a.std_, b.std_);
    if (c != std::strong_ordering::equal) return c;
    return compare_rationals(a.eps_, b.eps_);
}

std::string to_string(const LambdaValue& v) {
    if (v.is_infinite()) return "inf";
    if (sgn(v.eps()) == 0) return to_string(v.standard());
    std::string out = to_string(v.standard());
    if (sgn(v.eps()) > 0) {
        out += " + " + to_string(v.eps());
    } else {
        out += " - " + to_string(Rational(-v.eps()));
    }
    return out + "*eps";
}

LambdaValue parse_lambda(std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw ValidationError("empty value literal");
    if (s == "inf" || s == "+inf" || s == "infinity") return LambdaValue::infinity();

    // Split into signed terms; each is either a rational or "<rational>*eps"/"eps".
    Rational standard = 0, eps = 0;
    bool saw_term = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find_first_of("+-", pos + 1);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? s.size() : next;
        if (term == "+" || term == "-") throw ValidationError("malformed value literal '" + std::string(text) + "'");

        bool negative = false;
        std::string_view body = term;
        if (body.front() == '+' || body.front() == '-') {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        bool is_eps = false;
        if (body.size() >= 3 && body.substr(body.size() - 3) == "eps") {
            is_eps = true;
            body.remove_suffix(3);
            if (!body.empty()) {
                if (body.back() != '*') throw ValidationError("malformed value literal '" + std::string(text) + "'");
                body.remove_suffix(1);
            }
        }
        Rational coeff = body.empty() && is_eps ? Rational(1) : parse_rational(body);
        if (negative) coeff = -coeff;
        (is_eps ? eps : standard) += coeff;
        saw_term = true;
    }
    if (!saw_term) throw ValidationError("malformed value literal '" + std::string(text) + "'");
    return LambdaValue(standard, eps);
}

std::ostream& operator<<(std::ostream& os, const LambdaValue& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const RationalValue& v) { return os << to_string(v); }

}  // namespace keypoly
