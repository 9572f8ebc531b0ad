#include "dtc/sequence.hpp"

#include <cstdlib>
#include <stdexcept>

#include "dtc/outcome.hpp"

namespace dtc {

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::ok: return "ok";
        case DecodeStatus::no_solution: return "no_solution";
        case DecodeStatus::ambiguous: return "ambiguous";
        case DecodeStatus::bch_failure: return "bch_failure";
        case DecodeStatus::invalid_input: return "invalid_input";
    }
    return "unknown";
}

int weight(const BitString& x) {
    int w = 0;
    for (Bit b : x) w += b;
    return w;
}

int run_count(const BitString& x) {
    if (x.empty()) return 0;
    int r = 1;
    for (size_t i = 1; i < x.size(); ++i)
        if (x[i] != x[i - 1]) ++r;
    return r;
}

PhiVector phi(const BitString& x) {
    PhiVector u;
    u.reserve(weight(x) + 1);
    int gap = 0;
    for (Bit b : x) {
        if (b == 0) {
            ++gap;
        } else {
            u.push_back(gap);
            gap = 0;
        }
    }
    u.push_back(gap);
    return u;
}

BitString phi_inverse(const PhiVector& u) {
    if (u.empty()) throw std::invalid_argument("phi_inverse: empty gap vector");
    BitString x;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0) throw std::invalid_argument("phi_inverse: negative gap");
        x.insert(x.end(), u[i], 0);
        if (i + 1 < u.size()) x.push_back(1);
    }
    return x;
}

BitString psi(const BitString& x) {
    BitString y(x.size());
    int acc = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        acc ^= x[i];
        y[i] = static_cast<Bit>(acc);
    }
    return y;
}

BitString psi_inverse(const BitString& y) {
    BitString x(y.size());
    Bit prev = 0;
    for (size_t i = 0; i < y.size(); ++i) {
        x[i] = y[i] ^ prev;
        prev = y[i];
    }
    return x;
}

uint64_t vt_syndrome(const BitString& x) {
    uint64_t s = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i]) s += i + 1;
    return s;
}

int lee_weight(const QaryString& x) {
    int s = 0;
    for (int v : x.symbols) {
        if (v < 0 || v >= x.q) throw std::invalid_argument("lee_weight: symbol out of range");
        s += std::min(v, x.q - v);
    }
    return s;
}

int lee_distance(const QaryString& x, const QaryString& y) {
    if (x.q != y.q) throw std::invalid_argument("lee_distance: alphabet mismatch");
    if (x.symbols.size() != y.symbols.size())
        throw std::invalid_argument("lee_distance: length mismatch");
    QaryString d{x.q, std::vector<int>(x.symbols.size())};
    for (size_t i = 0; i < x.symbols.size(); ++i)
        d.symbols[i] = ((x.symbols[i] - y.symbols[i]) % x.q + x.q) % x.q;
    return lee_weight(d);
}

long l1_distance(const PhiVector& a, const PhiVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("l1_distance: length mismatch");
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += std::labs(static_cast<long>(a[i]) - b[i]);
    return s;
}

std::string to_text(const BitString& x) {
    std::string s(x.size(), '0');
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i]) s[i] = '1';
    return s;
}

BitString bits_from_text(const std::string& s) {
    BitString x;
    x.reserve(s.size());
    for (char c : s) {
        if (c == '0')
            x.push_back(0);
        else if (c == '1')
            x.push_back(1);
        else
            throw std::invalid_argument("bits_from_text: expected '0' or '1'");
    }
    return x;
}

BitString bits_from_index(uint64_t v, int n) {
    BitString x(n);
    for (int i = 0; i < n; ++i) x[i] = static_cast<Bit>((v >> i) & 1);
    return x;
}

std::string phi_to_text(const PhiVector& u) {
    std::string s;
    for (size_t i = 0; i < u.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(u[i]);
    }
    return s;
}

PhiVector phi_from_text(const std::string& s) {
    PhiVector u;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        u.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return u;
}

}  // namespace dtc
