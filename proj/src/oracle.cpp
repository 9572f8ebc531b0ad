#include "dtc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <stdexcept>

#include "dtc/channel.hpp"
#include "dtc/lee_code.hpp"
#include "dtc/list_code.hpp"
#include "dtc/shift_code.hpp"
#include "dtc/single_code.hpp"
#include "json.hpp"

namespace dtc {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

constexpr size_t kMaxFailures = 32;

}  // namespace

void VerificationReport::add_failure(const std::string& f) {
    if (failures.size() < kMaxFailures) failures.push_back(f);
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["total_cases"] = total_cases;
    j["verified"] = verified();
    j["failures"] = failures;
    j["elapsed_seconds"] = elapsed_seconds;
    return j.dump();
}

VerificationReport balls_disjoint(const std::vector<BitString>& code, const BallFn& ball,
                                  const std::string& name) {
    Timer timer;
    VerificationReport rep;
    rep.name = name;
    std::map<BitString, const BitString*> owner;
    for (const auto& c : code) {
        for (const auto& y : ball(c)) {
            ++rep.total_cases;
            auto [it, fresh] = owner.insert({y, &c});
            if (!fresh && *it->second != c)
                rep.add_failure("balls of " + to_text(*it->second) + " and " + to_text(c) +
                                " share " + to_text(y));
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport exhaustive_decode_check(const std::vector<BitString>& code, const BallFn& ball,
                                           const DecodeFn& dec, const std::string& name,
                                           long long case_guard) {
    Timer timer;
    VerificationReport rep;
    rep.name = name;
    for (const auto& c : code) {
        for (const auto& y : ball(c)) {
            if (++rep.total_cases > case_guard) {
                rep.add_failure("case guard exceeded at " + std::to_string(case_guard));
                rep.elapsed_seconds = timer.seconds();
                return rep;
            }
            auto got = dec(y);
            if (!got || *got != c)
                rep.add_failure("decode(" + to_text(y) + ") != " + to_text(c) +
                                (got ? " (got " + to_text(*got) + ")" : " (failure)"));
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport exhaustive_list_decode_check(const std::vector<BitString>& code,
                                                const BallFn& ball, const ListDecodeFn& dec,
                                                const std::string& name, int* max_list_out,
                                                long long case_guard) {
    Timer timer;
    VerificationReport rep;
    rep.name = name;
    int max_list = 0;
    for (const auto& c : code) {
        for (const auto& y : ball(c)) {
            if (++rep.total_cases > case_guard) {
                rep.add_failure("case guard exceeded at " + std::to_string(case_guard));
                rep.elapsed_seconds = timer.seconds();
                if (max_list_out) *max_list_out = max_list;
                return rep;
            }
            auto list = dec(y);
            max_list = std::max(max_list, static_cast<int>(list.size()));
            if (std::find(list.begin(), list.end(), c) == list.end())
                rep.add_failure("list for " + to_text(y) + " misses " + to_text(c));
        }
    }
    if (max_list_out) *max_list_out = max_list;
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

std::set<BitString> find_containing_codewords(const BitString& y,
                                              const std::vector<BitString>& code, int t, int s) {
    std::set<BitString> out;
    for (const auto& c : code)
        if (error_ball(c, t, s).count(y)) out.insert(c);
    return out;
}

namespace {

void rec_enum(const BitString& cur, int t, int s,
              std::set<std::tuple<BitString, int, int>>& seen, std::set<BitString>& out) {
    out.insert(cur);
    if (t > 0) {
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] != 0) continue;
            BitString next = cur;
            next.erase(next.begin() + i);
            if (seen.insert({next, t - 1, s}).second) rec_enum(next, t - 1, s, seen, out);
        }
    }
    if (s > 0) {
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] == cur[i + 1]) continue;
            BitString next = cur;
            std::swap(next[i], next[i + 1]);
            if (seen.insert({next, t, s - 1}).second) rec_enum(next, t, s - 1, seen, out);
        }
    }
}

void rec_block_enum(const BitString& cur, int t_b, int ell, int s,
                    std::set<std::tuple<BitString, int, int>>& seen, std::set<BitString>& out) {
    out.insert(cur);
    if (t_b > 0) {
        for (size_t i = 0; i < cur.size(); ++i) {
            for (int j = 1; j <= ell && i + j <= cur.size(); ++j) {
                bool zeros = true;
                for (int z = 0; z < j; ++z)
                    if (cur[i + z] != 0) zeros = false;
                if (!zeros) break;
                BitString next = cur;
                next.erase(next.begin() + i, next.begin() + i + j);
                if (seen.insert({next, t_b - 1, s}).second)
                    rec_block_enum(next, t_b - 1, ell, s, seen, out);
            }
        }
    }
    if (s > 0) {
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] == cur[i + 1]) continue;
            BitString next = cur;
            std::swap(next[i], next[i + 1]);
            if (seen.insert({next, t_b, s - 1}).second) rec_block_enum(next, t_b, ell, s - 1, seen, out);
        }
    }
}

}  // namespace

std::set<BitString> recursive_ball_enum(const BitString& x, int t, int s) {
    std::set<std::tuple<BitString, int, int>> seen;
    std::set<BitString> out;
    rec_enum(x, t, s, seen, out);
    return out;
}

std::set<BitString> recursive_block_ball_enum(const BitString& x, int t_b, int ell, int s) {
    std::set<std::tuple<BitString, int, int>> seen;
    std::set<BitString> out;
    rec_block_enum(x, t_b, ell, s, seen, out);
    return out;
}

// ---- exact maximum code ----

namespace {

struct Bitset {
    std::vector<uint64_t> w;
    explicit Bitset(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (auto v : w) c += __builtin_popcountll(v);
        return c;
    }
    int count_and(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w.size(); ++i) c += __builtin_popcountll(w[i] & o.w[i]);
        return c;
    }
    void andn(const Bitset& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    }
    int first() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
    std::vector<int> elements() const {
        std::vector<int> out;
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t v = w[i];
            while (v) {
                out.push_back(static_cast<int>(i * 64 + __builtin_ctzll(v)));
                v &= v - 1;
            }
        }
        return out;
    }
};

// Maximum independent set of the conflict graph, branch and bound with a
// clique-cover bound.  The cover reuses the graph's own structure: every set
// of codewords sharing one received string is a clique, and a greedy
// max-overlap selection of those covers the candidates tightly.  Branching
// runs from the last cover class down, pruning on |chosen| + class index.
struct MisSolver {
    std::vector<Bitset> gadj;     // conflict adjacency
    std::vector<Bitset> comp;     // complement adjacency
    std::vector<Bitset> cliques;  // received-string cliques
    int V;
    int best = 0;
    long long nodes = 0;
    long long guard;

    MisSolver(std::vector<Bitset> conflict_adj, std::vector<Bitset> cl, int v, long long g)
        : gadj(std::move(conflict_adj)), cliques(std::move(cl)), V(v), guard(g) {
        comp.assign(V, Bitset(V));
        for (int i = 0; i < V; ++i)
            for (int j = 0; j < V; ++j)
                if (i != j && !gadj[i].test(j)) comp[i].set(j);
    }

    void expand(Bitset P, int rsize) {
        if (++nodes > guard) throw std::runtime_error("max_code_size: node guard exceeded");
        // conflict-free candidates always join the optimum
        for (int v = P.first(); v >= 0;) {
            Bitset rest = P;
            rest.reset(v);
            if (gadj[v].count_and(rest) == 0) {
                P.reset(v);
                ++rsize;
                v = P.first();
            } else {
                int nxt = -1;
                for (int u : P.elements())
                    if (u > v) {
                        nxt = u;
                        break;
                    }
                v = nxt;
            }
        }
        if (P.count() == 0) {
            best = std::max(best, rsize);
            return;
        }
        // greedy clique cover of P; class index doubles as the color bound
        std::vector<std::pair<int, int>> colored;  // (vertex, class), classes ascending
        Bitset uncovered = P;
        int cls = 0;
        while (uncovered.count() > 0) {
            int best_i = -1, best_overlap = 1;
            for (size_t i = 0; i < cliques.size(); ++i) {
                int o = cliques[i].count_and(uncovered);
                if (o > best_overlap) {
                    best_overlap = o;
                    best_i = static_cast<int>(i);
                }
            }
            if (best_i < 0) {
                for (int v : uncovered.elements()) colored.push_back({v, ++cls});
                break;
            }
            ++cls;
            for (int v : cliques[best_i].elements())
                if (uncovered.test(v)) {
                    colored.push_back({v, cls});
                    uncovered.reset(v);
                }
        }
        for (int idx = static_cast<int>(colored.size()) - 1; idx >= 0; --idx) {
            auto [v, c] = colored[idx];
            if (rsize + c <= best) return;
            Bitset P1 = P;
            P1.reset(v);
            for (size_t wi = 0; wi < P1.w.size(); ++wi) P1.w[wi] &= comp[v].w[wi];
            if (P1.count() == 0)
                best = std::max(best, rsize + 1);
            else
                expand(P1, rsize + 1);
            P.reset(v);
        }
    }
};

}  // namespace

int max_code_size(int n, int t, int s, long long node_guard) {
    if (n > 16) throw std::invalid_argument("max_code_size: n <= 16 required");
    long long nodes = 0;
    int total = 0;
    for (int w = 0; w <= n; ++w) {
        std::vector<BitString> verts;
        for (uint64_t v = 0; v < (1ULL << n); ++v) {
            BitString x = bits_from_index(v, n);
            if (weight(x) == w) verts.push_back(std::move(x));
        }
        int V = static_cast<int>(verts.size());
        std::vector<Bitset> adj(V, Bitset(V));
        std::vector<Bitset> cliques;
        {
            std::map<BitString, std::vector<int>> members;
            for (int i = 0; i < V; ++i)
                for (const auto& y : error_ball(verts[i], t, s)) members[y].push_back(i);
            for (const auto& [y, idx] : members) {
                if (idx.size() < 2) continue;
                Bitset cl(V);
                for (size_t a = 0; a < idx.size(); ++a) {
                    cl.set(idx[a]);
                    for (size_t b = a + 1; b < idx.size(); ++b) {
                        adj[idx[a]].set(idx[b]);
                        adj[idx[b]].set(idx[a]);
                    }
                }
                cliques.push_back(std::move(cl));
            }
        }
        // seeds: greedy by low conflict degree, and the largest syndrome
        // class of sum i*phi_i mod (w+1), which is always conflict-free
        std::vector<int> order(V);
        for (int i = 0; i < V; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return adj[a].count() < adj[b].count(); });
        Bitset blocked(V);
        int greedy = 0;
        for (int v : order)
            if (!blocked.test(v)) {
                blocked.set(v);
                for (int u : adj[v].elements()) blocked.set(u);
                ++greedy;
            }
        int seed = greedy;
        if (t == 1 && s == 0 && w + 1 >= 2) {
            std::map<long, int> vt_class;
            for (const auto& x : verts) {
                PhiVector u = phi(x);
                long acc = 0;
                for (size_t i = 0; i < u.size(); ++i) acc += static_cast<long>(i + 1) * u[i];
                seed = std::max(seed, ++vt_class[acc % (w + 1)]);
            }
        }
        MisSolver solver(adj, std::move(cliques), V, node_guard - nodes);
        solver.best = seed;
        Bitset all(V);
        for (int i = 0; i < V; ++i) all.set(i);
        solver.expand(all, 0);
        nodes += solver.nodes;
        total += solver.best;
    }
    return total;
}

int max_code_cover_bound(int n, int t, int s) {
    if (n > 20) throw std::invalid_argument("max_code_cover_bound: n <= 20 required");
    int total = 0;
    for (int w = 0; w <= n; ++w) {
        std::vector<BitString> verts;
        for (uint64_t v = 0; v < (1ULL << n); ++v) {
            BitString x = bits_from_index(v, n);
            if (weight(x) == w) verts.push_back(std::move(x));
        }
        int V = static_cast<int>(verts.size());
        std::vector<Bitset> cliques;
        {
            std::map<BitString, std::vector<int>> members;
            for (int i = 0; i < V; ++i)
                for (const auto& y : error_ball(verts[i], t, s)) members[y].push_back(i);
            for (const auto& [y, idx] : members) {
                if (idx.size() < 2) continue;
                Bitset cl(V);
                for (int i : idx) cl.set(i);
                cliques.push_back(std::move(cl));
            }
        }
        Bitset uncovered(V);
        for (int i = 0; i < V; ++i) uncovered.set(i);
        while (uncovered.count() > 0) {
            int best_i = -1, best_overlap = 1;
            for (size_t i = 0; i < cliques.size(); ++i) {
                int o = cliques[i].count_and(uncovered);
                if (o > best_overlap) {
                    best_overlap = o;
                    best_i = static_cast<int>(i);
                }
            }
            if (best_i < 0) {
                total += uncovered.count();
                break;
            }
            uncovered.andn(cliques[best_i]);
            ++total;
        }
    }
    return total;
}

// ---- family harnesses ----

namespace {

// Construction-2 channel: at most one deletion of either bit plus directed
// transposition budgets, any interleaving.
std::set<BitString> any_deletion_shift_ball(const BitString& x, int dels, int s_plus,
                                            int s_minus) {
    std::set<BitString> ball;
    std::set<std::tuple<BitString, int, int, int>> seen;
    std::vector<std::tuple<BitString, int, int, int>> stack;
    stack.push_back({x, dels, s_plus, s_minus});
    seen.insert(stack.back());
    while (!stack.empty()) {
        auto [cur, dl, spl, sml] = stack.back();
        stack.pop_back();
        ball.insert(cur);
        if (dl > 0) {
            for (size_t i = 0; i < cur.size(); ++i) {
                BitString next = cur;
                next.erase(next.begin() + i);
                auto st = std::make_tuple(std::move(next), dl - 1, spl, sml);
                if (seen.insert(st).second) stack.push_back(st);
            }
        }
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] == cur[i + 1]) continue;
            bool right = cur[i] == 0;
            int nspl = spl - (right ? 1 : 0), nsml = sml - (right ? 0 : 1);
            if (nspl < 0 || nsml < 0) continue;
            BitString next = cur;
            std::swap(next[i], next[i + 1]);
            auto st = std::make_tuple(std::move(next), dl, nspl, nsml);
            if (seen.insert(st).second) stack.push_back(st);
        }
    }
    return ball;
}

void merge(VerificationReport& into, const VerificationReport& part) {
    into.total_cases += part.total_cases;
    for (const auto& f : part.failures) into.add_failure(f);
}

}  // namespace

VerificationReport verify_single_exhaustive(int n) {
    Timer timer;
    VerificationReport rep;
    rep.name = "single n=" + std::to_string(n);
    int64_t p = smallest_prime_at_least(4L * n + 1);
    std::map<int64_t, std::vector<BitString>> classes;
    for (uint64_t v = 0; v < (1ULL << n); ++v) {
        BitString x = bits_from_index(v, n);
        classes[SingleCode::syndrome(x, p)].push_back(std::move(x));
    }
    auto ball = [](const BitString& x) {
        std::set<BitString> b = error_ball(x, 1, 0);
        auto b2 = error_ball(x, 0, 1);
        b.insert(b2.begin(), b2.end());
        return b;
    };
    for (const auto& [a, code] : classes) {
        SingleCode sc(n, a, p);
        merge(rep, balls_disjoint(code, ball, ""));
        merge(rep, exhaustive_decode_check(
                       code, ball,
                       [&](const BitString& y) -> std::optional<BitString> {
                           auto out = sc.decode(y);
                           if (!out.ok()) return std::nullopt;
                           return out.word;
                       },
                       ""));
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_shift_exhaustive(int n, int s_plus, int s_minus) {
    Timer timer;
    VerificationReport rep;
    rep.name = "shift n=" + std::to_string(n) + " s+=" + std::to_string(s_plus) +
               " s-=" + std::to_string(s_minus);
    int s = s_plus + s_minus;
    std::map<std::pair<int64_t, int>, std::vector<BitString>> classes;
    {
        ShiftCode probe(n, s_plus, s_minus, 0, 0);
        for (uint64_t v = 0; v < (1ULL << n); ++v) {
            BitString x = bits_from_index(v, n);
            BitString px = psi(x);
            if (!probe.bch().is_codeword(std::vector<int>(px.begin(), px.end()))) continue;
            int64_t a = static_cast<int64_t>(vt_syndrome(x)) % (n + s + 1);
            classes[{a, weight(x) % 2}].push_back(std::move(x));
        }
    }
    auto ball = [&](const BitString& x) { return any_deletion_shift_ball(x, 1, s_plus, s_minus); };
    for (const auto& [key, code] : classes) {
        ShiftCode sc(n, s_plus, s_minus, key.first, key.second);
        merge(rep, exhaustive_decode_check(
                       code, ball,
                       [&](const BitString& y) -> std::optional<BitString> {
                           auto out = sc.decode(y);
                           if (!out.ok()) return std::nullopt;
                           return out.word;
                       },
                       ""));
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_lee_exhaustive(int n, int t, int s) {
    Timer timer;
    VerificationReport rep;
    int r = t + 2 * s;
    rep.name = "lee n=" + std::to_string(n) + " t=" + std::to_string(t) + " s=" + std::to_string(s);
    int64_t p = LeeCode::default_prime(n, r);
    std::map<std::vector<int64_t>, std::vector<BitString>> classes;
    for (uint64_t v = 0; v < (1ULL << n); ++v) {
        BitString x = bits_from_index(v, n);
        classes[LeeCode::syndromes(x, r, p)].push_back(std::move(x));
    }
    auto ball = [&](const BitString& x) { return error_ball(x, t, s); };
    for (const auto& [a, code] : classes) {
        LeeCode lc(n, r, p, a);
        merge(rep, exhaustive_decode_check(
                       code, ball,
                       [&](const BitString& y) -> std::optional<BitString> {
                           auto out = lc.decode(y, t, s);
                           if (!out.ok()) return std::nullopt;
                           return out.word;
                       },
                       ""));
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_lee_distance_property(int n, int r) {
    Timer timer;
    VerificationReport rep;
    rep.name = "lee distance n=" + std::to_string(n) + " r=" + std::to_string(r);
    int64_t p = LeeCode::default_prime(n, r);
    std::map<std::pair<int, std::vector<int64_t>>, std::vector<PhiVector>> groups;
    for (uint64_t v = 0; v < (1ULL << n); ++v) {
        BitString x = bits_from_index(v, n);
        groups[{weight(x), LeeCode::syndromes(x, r, p)}].push_back(phi(x));
    }
    for (const auto& [key, vecs] : groups) {
        for (size_t i = 0; i < vecs.size(); ++i)
            for (size_t j = i + 1; j < vecs.size(); ++j) {
                ++rep.total_cases;
                long d = l1_distance(vecs[i], vecs[j]);
                if (d < 2L * (r + 1))
                    rep.add_failure("distance " + std::to_string(d) + " < " +
                                    std::to_string(2 * (r + 1)) + " between " +
                                    phi_to_text(vecs[i]) + " and " + phi_to_text(vecs[j]));
            }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_list_exhaustive(int n, int t, int s_plus, int s_minus,
                                          int* max_list_out) {
    Timer timer;
    VerificationReport rep;
    rep.name = "list n=" + std::to_string(n) + " t=" + std::to_string(t) +
               " s+=" + std::to_string(s_plus) + " s-=" + std::to_string(s_minus);
    int kappa = std::max(t, s_plus + s_minus + 1);
    int64_t p = smallest_prime_at_least(n + 1);
    std::map<std::vector<int64_t>, std::vector<BitString>> classes;
    for (uint64_t v = 0; v < (1ULL << n); ++v) {
        BitString x = bits_from_index(v, n);
        classes[ListCode::syndromes(x, kappa, p)].push_back(std::move(x));
    }
    auto ball = [&](const BitString& x) { return error_ball_asym(x, t, s_plus, s_minus); };
    int max_list = 0;
    for (const auto& [a, code] : classes) {
        ListCode lc(n, t, s_plus, s_minus, p, a);
        int ml = 0;
        merge(rep, exhaustive_list_decode_check(
                       code, ball, [&](const BitString& y) { return lc.decode_list(y); }, "", &ml));
        max_list = std::max(max_list, ml);
    }
    if (max_list_out) *max_list_out = max_list;
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_block_nonsys_exhaustive(int n, BlockParams params) {
    Timer timer;
    VerificationReport rep;
    rep.name = "block n=" + std::to_string(n) + " tb=" + std::to_string(params.t_b) +
               " ell=" + std::to_string(params.ell) + " s=" + std::to_string(params.s);
    BlockCode bc(n, params);
    auto code = bc.codebook();
    auto ball = [&](const BitString& x) {
        return block_deletion_ball(x, params.t_b, params.ell, params.s);
    };
    merge(rep, balls_disjoint(code, ball, ""));
    merge(rep, exhaustive_decode_check(
                   code, ball,
                   [&](const BitString& y) -> std::optional<BitString> {
                       auto out = bc.decode(y);
                       if (!out.ok()) return std::nullopt;
                       return out.word;
                   },
                   ""));
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_block_systematic_random(int k, BlockParams params, int trials,
                                                  uint64_t seed) {
    Timer timer;
    VerificationReport rep;
    rep.name = "block systematic k=" + std::to_string(k) + " tb=" + std::to_string(params.t_b) +
               " ell=" + std::to_string(params.ell) + " s=" + std::to_string(params.s);
    static const IdentityProtector prot;
    SystematicBlockCode code(k, params, prot);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        BitString msg(k);
        for (int i = 0; i < k; ++i) msg[i] = static_cast<Bit>(rng() & 1);
        BitString enc = code.encode(msg);
        ErrorPattern pat =
            sample_pattern(enc, BlockBudget{params.t_b, params.ell, params.s}, rng());
        auto corrupted = apply_pattern(enc, pat);
        ++rep.total_cases;
        if (!corrupted) {
            rep.add_failure("sampled pattern inapplicable on trial " + std::to_string(trial));
            continue;
        }
        auto dec = code.decode(*corrupted);
        if (!dec.ok() || dec.word != msg)
            rep.add_failure("round trip failed on trial " + std::to_string(trial) + " msg " +
                            to_text(msg));
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

}  // namespace dtc
