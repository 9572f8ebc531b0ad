#include "dtc/block_code.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace dtc {

int64_t BlockParams::prime() const {
    int64_t base = static_cast<int64_t>(t_b) * ell + (strict_paper ? 4 : 5);
    return smallest_prime_at_least(std::max<int64_t>(base, 2));
}

BlockCode::BlockCode(int n, BlockParams params)
    : n_(n),
      params_(params),
      bch_(static_cast<int>(params.prime()),
           min_extension_degree(static_cast<int>(params.prime()), n + 1),
           params.design_distance()) {
    if (n < 1) throw std::invalid_argument("BlockCode: n >= 1 required");
    if (params.t_b < 0 || params.ell < 0 || params.s < 0 || params.t_b + params.s < 1)
        throw std::invalid_argument("BlockCode: invalid channel parameters");
}

namespace {

std::vector<int> phi_mod_p(const BitString& x, int64_t p) {
    PhiVector u = phi(x);
    std::vector<int> z(u.size());
    for (size_t i = 0; i < u.size(); ++i) z[i] = static_cast<int>(u[i] % p);
    return z;
}

}  // namespace

bool BlockCode::member(const BitString& x) const {
    if (static_cast<int>(x.size()) != n_) return false;
    return bch_.is_codeword(phi_mod_p(x, p()));
}

BlockCode::Trace BlockCode::decode_with_reference(const BitString& y,
                                                  const std::vector<int>& z_star) const {
    Trace tr;
    int64_t pp = p();
    PhiVector uy = phi(y);
    tr.z_prime = phi_mod_p(y, pp);
    tr.z_star = z_star;
    if (z_star.size() != tr.z_prime.size()) {
        tr.outcome = DecodeOutcome::fail(DecodeStatus::bch_failure);
        return tr;
    }
    int thresh = params_.eps_threshold();
    tr.eps_prime.resize(uy.size());
    tr.eps.resize(uy.size());
    for (size_t i = 0; i < uy.size(); ++i) {
        int ep = static_cast<int>(((tr.z_prime[i] - z_star[i]) % pp + pp) % pp);
        tr.eps_prime[i] = ep;
        tr.eps[i] = ep <= thresh ? ep : ep - static_cast<int>(pp);
    }
    PhiVector ux(uy.size());
    long total = 0;
    for (size_t i = 0; i < uy.size(); ++i) {
        ux[i] = uy[i] - tr.eps[i];
        if (ux[i] < 0) {
            tr.outcome = DecodeOutcome::fail(DecodeStatus::no_solution);
            return tr;
        }
        total += ux[i];
    }
    if (total + static_cast<long>(uy.size()) - 1 != n_) {
        tr.outcome = DecodeOutcome::fail(DecodeStatus::no_solution);
        return tr;
    }
    tr.outcome = DecodeOutcome::success(phi_inverse(ux));
    return tr;
}

DecodeOutcome BlockCode::decode(const BitString& y) const {
    auto z_star = bch_.decode(phi_mod_p(y, p()));
    if (!z_star) return DecodeOutcome::fail(DecodeStatus::bch_failure);
    return decode_with_reference(y, *z_star).outcome;
}

std::vector<BitString> BlockCode::codebook() const {
    if (n_ > 24) throw std::invalid_argument("BlockCode: codebook too large to enumerate");
    std::vector<BitString> out;
    for (uint64_t v = 0; v < (1ULL << n_); ++v) {
        BitString x = bits_from_index(v, n_);
        if (member(x)) out.push_back(std::move(x));
    }
    return out;
}

// ---- balancing ----

namespace {

int ceil_log2(int64_t k) {
    int b = 0;
    int64_t v = 1;
    while (v < k) {
        v <<= 1;
        ++b;
    }
    return b;
}

using u128 = unsigned __int128;

// C(n, k), exact for the ranges in use (n <= 124 keeps it inside 128 bits)
u128 binom_u128(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    u128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return r;
}

}  // namespace

std::optional<BitString> balance_encode(const BitString& x) {
    int k = static_cast<int>(x.size());
    if (k < 1 || k > 120) return std::nullopt;
    int n = k + ceil_log2(k) + 1;
    int body = n - 1;
    int ones = body / 2;  // floor((n-1)/2) ones, the rest zeros
    if (binom_u128(body, ones) < (static_cast<u128>(1) << k)) return std::nullopt;

    u128 rank = 0;
    for (int i = 0; i < k; ++i) rank |= static_cast<u128>(x[i]) << (k - 1 - i);

    // unrank into the lexicographic list of weight-`ones` strings
    BitString out;
    out.reserve(n);
    out.push_back(1);
    int remaining = ones;
    for (int pos = 0; pos < body; ++pos) {
        u128 with_zero = binom_u128(body - pos - 1, remaining);
        if (rank < with_zero) {
            out.push_back(0);
        } else {
            rank -= with_zero;
            out.push_back(1);
            --remaining;
        }
    }
    if (remaining != 0) return std::nullopt;
    return out;
}

std::optional<BitString> balance_decode(const BitString& y) {
    int n = static_cast<int>(y.size());
    // recover k from n = k + ceil_log2(k) + 1
    int k = -1;
    for (int c = 1; c < n; ++c)
        if (c + ceil_log2(c) + 1 == n) k = c;
    if (k < 0 || k > 120) return std::nullopt;
    if (y.empty() || y[0] != 1) return std::nullopt;
    int body = n - 1;
    int ones = body / 2;
    int seen = 0;
    for (int i = 1; i < n; ++i) seen += y[i];
    if (seen != ones) return std::nullopt;

    u128 rank = 0;
    int remaining = ones;
    for (int pos = 0; pos < body; ++pos) {
        if (y[pos + 1] == 1) {
            rank += binom_u128(body - pos - 1, remaining);
            --remaining;
        }
    }
    if (rank >= (static_cast<u128>(1) << k)) return std::nullopt;
    BitString x(k);
    for (int i = 0; i < k; ++i) x[i] = static_cast<Bit>((rank >> (k - 1 - i)) & 1);
    return x;
}

BitString binary_map(const std::vector<int>& u, int64_t p) {
    int width = ceil_log2(p);
    BitString out;
    out.reserve(u.size() * width);
    for (int v : u) {
        if (v < 0 || v >= p) throw std::invalid_argument("binary_map: symbol out of range");
        for (int b = width - 1; b >= 0; --b) out.push_back(static_cast<Bit>((v >> b) & 1));
    }
    return out;
}

std::optional<std::vector<int>> binary_unmap(const BitString& bits, int64_t p) {
    int width = ceil_log2(p);
    if (width == 0 || bits.size() % width != 0) return std::nullopt;
    std::vector<int> u;
    u.reserve(bits.size() / width);
    for (size_t i = 0; i < bits.size(); i += width) {
        int v = 0;
        for (int b = 0; b < width; ++b) v = (v << 1) | bits[i + b];
        if (v >= p) return std::nullopt;
        u.push_back(v);
    }
    return u;
}

// ---- systematic construction ----

std::string SystematicLayout::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["t_b"] = params.t_b;
    j["ell"] = params.ell;
    j["s"] = params.s;
    j["p"] = p;
    j["m"] = m;
    j["parity_syms"] = parity_syms;
    j["formula_syms"] = formula_syms;
    j["parity_matches_formula"] = parity_syms == formula_syms;
    j["n1_sym"] = n1_sym;
    j["n1_bits"] = n1_bits;
    j["n1"] = n1;
    j["n2_digest"] = n2_digest;
    j["n2_bal"] = n2_bal;
    j["n2"] = n2;
    j["N"] = total_length();
    return j.dump();
}

SystematicLayout layout_for(int k, BlockParams params) {
    SystematicLayout lay;
    lay.k = k;
    lay.params = params;
    lay.p = params.prime();
    int p = static_cast<int>(lay.p);

    // smallest m whose mother code holds k+1 message symbols plus parity
    for (int m = 1;; ++m) {
        if (m > 8) throw std::invalid_argument("layout_for: k out of desk-scale range");
        try {
            BchCode probe(p, m, params.design_distance());
            if (static_cast<int64_t>(probe.mother_length()) >= k + 1 + probe.parity()) {
                lay.m = m;
                lay.parity_syms = probe.parity();
                break;
            }
        } catch (const std::invalid_argument&) {
            // design distance exceeds this mother length; grow the field
        }
    }
    lay.formula_syms = bch_parity_length_formula(params.t_b, params.ell, params.s, lay.m);

    lay.n1_sym = lay.parity_syms + 1;  // parity plus one zero pad symbol
    lay.n1_bits = lay.n1_sym * ceil_log2(lay.p);
    lay.n1 = 2 + lay.n1_bits + ceil_log2(lay.n1_bits) + 1;
    lay.n2_digest = lay.n1;  // identity protector digest
    lay.n2_bal = lay.n2_digest + ceil_log2(lay.n2_digest) + 1;
    lay.n2 = params.rep() * lay.n2_bal;

    lay.weight_h1 = 2 + 1 + (lay.n1 - 3) / 2;
    lay.weight_h2 = params.rep() * (1 + (lay.n2_bal - 1) / 2);
    return lay;
}

SystematicBlockCode::SystematicBlockCode(int k, BlockParams params, const Protector& prot)
    : layout_(layout_for(k, params)),
      bch_(static_cast<int>(layout_.p), layout_.m, params.design_distance()),
      prot_(&prot) {
    if (k < 2) throw std::invalid_argument("SystematicBlockCode: k >= 2 required");
}

BitString SystematicBlockCode::encode(const BitString& msg) const {
    const auto& L = layout_;
    if (static_cast<int>(msg.size()) != L.k)
        throw std::invalid_argument("SystematicBlockCode: message length mismatch");

    PhiVector u = phi(msg);  // phi of msg with trailing 1 appended
    std::vector<int> cbar(L.k + 1, 0);
    for (size_t i = 0; i < u.size(); ++i) cbar[i] = static_cast<int>(u[i] % L.p);

    std::vector<int> word = bch_.encode_systematic(cbar);
    std::vector<int> gsyms(word.begin() + L.k + 1, word.end());
    gsyms.push_back(0);  // pad to n1_sym symbols

    auto bal1 = balance_encode(binary_map(gsyms, L.p));
    if (!bal1) throw std::length_error("SystematicBlockCode: balance capacity exceeded");
    BitString h1;
    h1.reserve(L.n1);
    h1.push_back(1);
    h1.push_back(1);
    h1.insert(h1.end(), bal1->begin(), bal1->end());

    BitString digest = prot_->protect(h1);
    auto bal2 = balance_encode(digest);
    if (!bal2) throw std::length_error("SystematicBlockCode: balance capacity exceeded");

    BitString out;
    out.reserve(L.total_length());
    out.insert(out.end(), msg.begin(), msg.end());
    out.insert(out.end(), h1.begin(), h1.end());
    for (Bit b : *bal2) out.insert(out.end(), L.params.rep(), b);
    return out;
}

namespace {

// index (0-based) of the c-th 1 counted from the end; -1 when fewer exist
int index_of_cth_one_from_end(const BitString& d, int c) {
    int seen = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
        if (d[i] && ++seen == c) return i;
    }
    return -1;
}

// Recover the n_u-bit word u from a slice of Rep_rep(u): group the slice's 1s
// into blocks of rep, then round each block-to-block zero span to the nearest
// multiple of rep.
std::optional<BitString> repetition_decode(const BitString& slice, int n_u, int rep) {
    int w = weight(slice);
    if (w == 0 || w % rep != 0) return std::nullopt;
    int k_ones = w / rep;
    PhiVector gaps = phi(slice);  // length w+1, gaps[0] == 0 for a leading 1
    BitString u;
    u.reserve(n_u);
    for (int j = 0; j < k_ones; ++j) {
        long z = 0;
        for (int t = (j == 0) ? 0 : j * rep + 1; t <= (j + 1) * rep; ++t) z += gaps[t];
        long zhat = (2 * z + rep) / (2 * rep);  // nearest multiple, rep odd
        u.push_back(1);
        u.insert(u.end(), zhat, 0);
    }
    if (static_cast<int>(u.size()) != n_u) return std::nullopt;
    return u;
}

}  // namespace

DecodeOutcome SystematicBlockCode::decode(const BitString& received) const {
    const auto& L = layout_;
    int i_r2 = index_of_cth_one_from_end(received, L.weight_h2);
    int i_r1 = index_of_cth_one_from_end(received, L.weight_h2 + L.weight_h1);
    if (i_r2 < 0 || i_r1 < 0 || i_r1 >= i_r2)
        return DecodeOutcome::fail(DecodeStatus::no_solution);

    BitString h2_slice(received.begin() + i_r2, received.end());
    auto bal2 = repetition_decode(h2_slice, L.n2_bal, L.params.rep());
    if (!bal2) return DecodeOutcome::fail(DecodeStatus::no_solution);
    auto digest = balance_decode(*bal2);
    if (!digest) return DecodeOutcome::fail(DecodeStatus::no_solution);

    BitString h1_slice(received.begin() + i_r1, received.begin() + i_r2);
    auto h1 = prot_->recover(h1_slice, *digest);
    if (!h1 || static_cast<int>(h1->size()) != L.n1 || (*h1)[0] != 1 || (*h1)[1] != 1)
        return DecodeOutcome::fail(DecodeStatus::no_solution);

    BitString bal1(h1->begin() + 2, h1->end());
    auto gbits = balance_decode(bal1);
    if (!gbits) return DecodeOutcome::fail(DecodeStatus::no_solution);
    auto gsyms = binary_unmap(*gbits, L.p);
    if (!gsyms || static_cast<int>(gsyms->size()) != L.n1_sym)
        return DecodeOutcome::fail(DecodeStatus::no_solution);
    std::vector<int> parity(gsyms->begin(), gsyms->end() - 1);  // drop the pad

    // message region: pad phi to k+1 symbols, append the recovered parity,
    // run the inner decoder, unwrap the per-gap error values
    BitString ymsg(received.begin(), received.begin() + i_r1);
    PhiVector uy = phi(ymsg);
    int r_c = static_cast<int>(uy.size());
    if (r_c > L.k + 1) return DecodeOutcome::fail(DecodeStatus::no_solution);
    std::vector<int> word(L.k + 1 + parity.size(), 0);
    for (int i = 0; i < r_c; ++i) word[i] = static_cast<int>(uy[i] % L.p);
    std::copy(parity.begin(), parity.end(), word.begin() + L.k + 1);

    auto fixed = bch_.decode(word);
    if (!fixed) return DecodeOutcome::fail(DecodeStatus::bch_failure);

    int thresh = L.params.eps_threshold();
    PhiVector ux(r_c);
    for (int i = 0; i < L.k + 1; ++i) {
        int ep = static_cast<int>(((word[i] - (*fixed)[i]) % L.p + L.p) % L.p);
        int e = ep <= thresh ? ep : ep - static_cast<int>(L.p);
        if (i < r_c) {
            ux[i] = uy[i] - e;
            if (ux[i] < 0) return DecodeOutcome::fail(DecodeStatus::no_solution);
        } else if (e != 0) {
            return DecodeOutcome::fail(DecodeStatus::no_solution);
        }
    }
    BitString msg = phi_inverse(ux);
    if (static_cast<int>(msg.size()) != L.k) return DecodeOutcome::fail(DecodeStatus::no_solution);
    return DecodeOutcome::success(msg);
}

}  // namespace dtc
