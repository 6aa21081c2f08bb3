#include "supercoho/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace supercoho {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!valid_integer(s)) throw std::invalid_argument("Rat: malformed integer '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text));
    auto n = parse_integer(trim(text.substr(0, slash)));
    auto d = parse_integer(trim(text.substr(slash + 1)));
    return Rat(n, d);
}

std::string Rat::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace supercoho
