#include "msrs/rat.hpp"

#include <stdexcept>

namespace msrs {

BigInt floor_of(const Rat& r) {
    BigInt n = num_of(r), d = den_of(r);
    BigInt q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

BigInt ceil_of(const Rat& r) {
    BigInt n = num_of(r), d = den_of(r);
    BigInt q = n / d;
    if (n % d != 0 && n > 0) q += 1;
    return q;
}

std::int64_t to_i64(const BigInt& v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw std::overflow_error("value exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

std::string to_string(const Rat& r) {
    if (den_of(r) == 1) return num_of(r).str();
    return num_of(r).str() + "/" + den_of(r).str();
}

std::string to_decimal(const Rat& r, int digits) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat scaled = abs(r) * scale;
    BigInt whole = floor_of(scaled + Rat(1, 2));
    std::string s = whole.str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (r < 0 && s != "0") s.insert(0, "-");
    return s;
}

double to_double(const Rat& r) { return static_cast<double>(r); }

Rat parse_rat(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("not a rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    auto dot = text.find('.');
    auto digits_ok = [](const std::string& s, bool sign) {
        std::size_t i = 0;
        if (sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (slash != std::string::npos) {
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        if (!digits_ok(a, true) || !digits_ok(b, false)) throw bad();
        if (a[0] == '+') a.erase(0, 1);
        BigInt den(b);
        if (den == 0) throw bad();
        return Rat(BigInt(a), den);
    }
    if (dot != std::string::npos) {
        std::string a = text.substr(0, dot), b = text.substr(dot + 1);
        bool neg = !a.empty() && a[0] == '-';
        if (!a.empty() && a[0] == '+') a.erase(0, 1);
        if (a.empty() || a == "-") a += "0";
        if (!digits_ok(a, true) || !digits_ok(b, false)) throw bad();
        BigInt scale = 1;
        for (std::size_t i = 0; i < b.size(); ++i) scale *= 10;
        Rat frac(BigInt(b), scale);
        Rat whole{BigInt(a)};
        return neg ? whole - frac : whole + frac;
    }
    if (!digits_ok(text, true)) throw bad();
    return Rat(BigInt(text[0] == '+' ? text.substr(1) : text));
}

}  // namespace msrs
