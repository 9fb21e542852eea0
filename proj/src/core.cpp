#include "birack/core.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace birack {

// ---- permutations ----------------------------------------------------------

bool is_perm(const Perm& p) {
    int n = (int)p.size();
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm inverse_perm(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = (int)i;
    return q;
}

const std::vector<Perm>& all_perms(int n) {
    if (n < 0 || n > 8)
        throw capacity_error("all_perms: only n <= 8 is supported");
    static std::mutex mu;
    static std::map<int, std::vector<Perm>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return cache.emplace(n, std::move(out)).first->second;
}

// ---- basic structure --------------------------------------------------------

void validate_rows(const Birack& b) {
    if (b.n <= 0) throw domain_error("birack must have at least one element");
    if ((int)b.up.size() != b.n || (int)b.dn.size() != b.n)
        throw domain_error("birack tables must have n rows");
    for (int r = 0; r < b.n; ++r) {
        if ((int)b.up[r].size() != b.n || !is_perm(b.up[r]))
            throw domain_error("up row " + std::to_string(r + 1) +
                               " is not a permutation");
        if ((int)b.dn[r].size() != b.n || !is_perm(b.dn[r]))
            throw domain_error("down row " + std::to_string(r + 1) +
                               " is not a permutation");
    }
}

bool trivial_table(const std::vector<Perm>& rows) {
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t i = 0; i < rows[r].size(); ++i)
            if (rows[r][i] != (int)i) return false;
    return true;
}

std::pair<int, int> switch_apply(const Birack& b, int a, int x) {
    return {b.up[a][x], b.dn[x][a]};
}

std::pair<int, int> switch_inverse_apply(const Birack& b, int c, int d) {
    // find (a, x) with x^a = c, a_x = d; scan candidate x and solve a from
    // the down row
    for (int x = 0; x < b.n; ++x) {
        int a = inverse_perm(b.dn[x])[d];
        if (b.up[a][x] == c) return {a, x};
    }
    throw structural_error("switch is not invertible at the requested output");
}

std::pair<int, int> sideways_P(const Birack& b, int a, int x) {
    int z = inverse_perm(b.dn[a])[x];  // z_a = x
    return {z, b.up[z][a]};
}

std::pair<int, int> sideways_P_inv(const Birack& b, int c, int d) {
    int a = inverse_perm(b.up[c])[d];  // a^c = d
    return {a, b.dn[a][c]};
}

std::pair<int, int> sideways_Q(const Birack& b, int a, int x) {
    int y = inverse_perm(b.up[x])[a];  // y^x = a
    return {b.dn[y][x], y};
}

std::pair<int, int> sideways_Q_inv(const Birack& b, int c, int d) {
    int x = inverse_perm(b.dn[d])[c];  // x_d = c
    return {b.up[x][d], x};
}

// ---- axioms ------------------------------------------------------------------

bool check_B1(const Birack& b) {
    for (int a = 0; a < b.n; ++a) {
        int x = inverse_perm(b.dn[a])[a];  // x_a = a
        if (b.up[x][a] != x) return false;
        int y = inverse_perm(b.up[a])[a];  // y^a = a
        if (b.dn[y][a] != y) return false;
    }
    return true;
}

bool check_B2(const Birack& b) {
    std::vector<char> seen(b.n * b.n, 0);
    for (int a = 0; a < b.n; ++a)
        for (int x = 0; x < b.n; ++x) {
            auto [c, d] = switch_apply(b, a, x);
            char& slot = seen[c * b.n + d];
            if (slot) return false;
            slot = 1;
        }
    return true;
}

namespace {

// apply S at positions (i, i+1) of a triple
inline void s_at(const Birack& b, int t[3], int i) {
    auto [c, d] = switch_apply(b, t[i], t[i + 1]);
    t[i] = c;
    t[i + 1] = d;
}

}  // namespace

bool check_B3(const Birack& b) {
    for (int a = 0; a < b.n; ++a)
        for (int x = 0; x < b.n; ++x)
            for (int y = 0; y < b.n; ++y) {
                int l[3] = {a, x, y}, r[3] = {a, x, y};
                s_at(b, l, 0); s_at(b, l, 1); s_at(b, l, 0);
                s_at(b, r, 1); s_at(b, r, 0); s_at(b, r, 1);
                if (l[0] != r[0] || l[1] != r[1] || l[2] != r[2]) return false;
            }
    return true;
}

bool check_derived_relations(const Birack& b) {
    const auto& up = b.up;
    const auto& dn = b.dn;
    for (int a = 0; a < b.n; ++a)
        for (int x = 0; x < b.n; ++x)
            for (int y = 0; y < b.n; ++y) {
                // (a^x)^y = (a^{y_x})^{x^y}
                if (up[y][up[x][a]] != up[up[y][x]][up[dn[x][y]][a]])
                    return false;
                // (a^x)_{y^{x_a}} = (a_y)^{x_{y^a}}
                if (dn[up[dn[a][x]][y]][up[x][a]] !=
                    up[dn[up[a][y]][x]][dn[y][a]])
                    return false;
                // (a_x)_y = (a_{y^x})_{x_y}
                if (dn[y][dn[x][a]] != dn[dn[y][x]][dn[up[x][y]][a]])
                    return false;
            }
    return true;
}

// ---- classification -----------------------------------------------------------

const char* class_name(StructureClass c) {
    switch (c) {
        case StructureClass::invalid: return "invalid";
        case StructureClass::quandle: return "quandle";
        case StructureClass::rack: return "rack";
        case StructureClass::biquandle: return "biquandle";
        case StructureClass::birack: return "birack";
    }
    return "invalid";
}

StructureClass class_from_name(const std::string& name) {
    if (name == "quandle") return StructureClass::quandle;
    if (name == "rack") return StructureClass::rack;
    if (name == "biquandle") return StructureClass::biquandle;
    if (name == "birack") return StructureClass::birack;
    if (name == "invalid") return StructureClass::invalid;
    throw domain_error("unknown structure class '" + name + "'");
}

std::string Classification::flags_prefix() const {
    std::string s;
    if (flag_s) s += "S, ";
    if (flag_pq) s += "PQ, ";
    if (flag_dpq) s += "DPQ, ";
    return s;
}

Birack normalize_rack_form(const Birack& b) {
    if (trivial_table(b.up) && !trivial_table(b.dn))
        return Birack{b.n, b.dn, b.up};
    return b;
}

int switch_order(const Birack& b) {
    // lcm of the cycle lengths of S acting on X^2
    int nn = b.n * b.n;
    std::vector<char> seen(nn, 0);
    long long ord = 1;
    for (int start = 0; start < nn; ++start) {
        if (seen[start]) continue;
        int len = 0, cur = start;
        do {
            seen[cur] = 1;
            ++len;
            auto [c, d] = switch_apply(b, cur / b.n, cur % b.n);
            cur = c * b.n + d;
        } while (cur != start);
        ord = std::lcm(ord, (long long)len);
    }
    return (int)ord;
}

namespace {

// number of columns on which every row agrees
int constant_columns(const std::vector<Perm>& rows) {
    int n = (int)rows.size(), count = 0;
    for (int col = 0; col < n; ++col) {
        bool constant = true;
        for (int r = 1; r < n && constant; ++r)
            constant = rows[r][col] == rows[0][col];
        if (constant) ++count;
    }
    return count;
}

bool all_rows_equal(const std::vector<Perm>& rows) {
    for (size_t r = 1; r < rows.size(); ++r)
        if (rows[r] != rows[0]) return false;
    return true;
}

}  // namespace

Classification classify(const Birack& b0) {
    validate_rows(b0);
    Birack b = normalize_rack_form(b0);
    Classification c;
    bool b2 = check_B2(b), b3 = check_B3(b);
    c.u = constant_columns(b.up);
    c.d = constant_columns(b.dn);
    c.c1 = c.u + c.d;
    c.c2 = std::abs(c.u - c.d);
    c.flag_s = b.up == b.dn;
    if (!b2 || !b3) {
        c.cls = StructureClass::invalid;
        c.order = b2 ? switch_order(b) : 0;
        return c;
    }
    bool b1 = check_B1(b);
    bool down_trivial = trivial_table(b.dn);
    c.cls = b1 ? (down_trivial ? StructureClass::quandle
                               : StructureClass::biquandle)
               : (down_trivial ? StructureClass::rack : StructureClass::birack);
    c.order = switch_order(b);
    if (c.cls == StructureClass::biquandle) {
        bool up_const = all_rows_equal(b.up), dn_const = all_rows_equal(b.dn);
        if (up_const && dn_const)
            c.flag_dpq = true;
        else if (up_const || dn_const)
            c.flag_pq = true;
    }
    return c;
}

// ---- relabeling, canonical forms, symmetries -----------------------------------

Birack relabel(const Birack& b, const Perm& sigma) {
    if ((int)sigma.size() != b.n || !is_perm(sigma))
        throw domain_error("relabeling must be a permutation of the labels");
    Perm si = inverse_perm(sigma);
    Birack out;
    out.n = b.n;
    out.up.assign(b.n, Perm(b.n));
    out.dn.assign(b.n, Perm(b.n));
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j) {
            out.up[i][j] = sigma[b.up[si[i]][si[j]]];
            out.dn[i][j] = sigma[b.dn[si[i]][si[j]]];
        }
    return out;
}

std::vector<int> flat_encoding(const Birack& b) {
    std::vector<int> out;
    out.reserve(2 * b.n * b.n);
    for (const auto& row : b.up) out.insert(out.end(), row.begin(), row.end());
    for (const auto& row : b.dn) out.insert(out.end(), row.begin(), row.end());
    return out;
}

Birack from_flat_encoding(int n, const std::vector<int>& flat) {
    if ((int)flat.size() != 2 * n * n)
        throw domain_error("flat encoding has the wrong length");
    Birack b;
    b.n = n;
    b.up.assign(n, Perm(n));
    b.dn.assign(n, Perm(n));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i < n; ++i) {
            b.up[r][i] = flat[r * n + i];
            b.dn[r][i] = flat[n * n + r * n + i];
        }
    return b;
}

namespace {

// write the flat encoding of relabel(b, sigma) into `out`, aborting early as
// soon as it exceeds `best` lexicographically; returns true if it is a new
// minimum (out fully written)
bool relabeled_flat_min(const Birack& b, const Perm& sigma, const Perm& si,
                        const std::vector<int>& best, std::vector<int>& out) {
    int n = b.n;
    bool smaller = best.empty();
    size_t pos = 0;
    for (int table = 0; table < 2; ++table) {
        const auto& rows = table == 0 ? b.up : b.dn;
        for (int i = 0; i < n; ++i) {
            const Perm& src = rows[si[i]];
            for (int j = 0; j < n; ++j, ++pos) {
                int v = sigma[src[si[j]]];
                if (!smaller) {
                    if (v > best[pos]) return false;
                    if (v < best[pos]) smaller = true;
                }
                out[pos] = v;
            }
        }
    }
    return smaller;
}

}  // namespace

std::vector<int> canonical_form(const Birack& b) {
    if (b.n > 8)
        throw capacity_error("canonical_form: relabeling scan only up to n = 8");
    const auto& perms = all_perms(b.n);
    std::vector<int> best, scratch(2 * b.n * b.n);
    for (const Perm& sigma : perms) {
        Perm si = inverse_perm(sigma);
        if (relabeled_flat_min(b, sigma, si, best, scratch)) best = scratch;
    }
    return best;
}

Birack symmetry(const Birack& b, SymmetryKind kind) {
    validate_rows(b);
    auto mirror = [](const Birack& s) {
        // table of S^{-1}: for S(a,x) = (c,d) set c^'... i.e. up'[c][d] = a,
        // dn'[d][c] = x
        Birack m;
        m.n = s.n;
        m.up.assign(s.n, Perm(s.n, -1));
        m.dn.assign(s.n, Perm(s.n, -1));
        for (int a = 0; a < s.n; ++a)
            for (int x = 0; x < s.n; ++x) {
                auto [c, d] = switch_apply(s, a, x);
                m.up[c][d] = a;
                m.dn[d][c] = x;
            }
        for (int r = 0; r < m.n; ++r)
            if (!is_perm(m.up[r]) || !is_perm(m.dn[r]))
                throw structural_error(
                    "crossing-sign symmetry requires an invertible switch");
        return m;
    };
    switch (kind) {
        case SymmetryKind::crossing_sign: return mirror(b);
        case SymmetryKind::orientation: return Birack{b.n, b.dn, b.up};
        case SymmetryKind::both: {
            Birack m = mirror(b);
            return Birack{m.n, m.dn, m.up};
        }
    }
    throw domain_error("unknown symmetry kind");
}

std::array<Birack, 4> symmetry_variants(const Birack& b) {
    return {b, symmetry(b, SymmetryKind::crossing_sign),
            symmetry(b, SymmetryKind::orientation),
            symmetry(b, SymmetryKind::both)};
}

std::vector<int> iso_key(const Birack& b) {
    std::vector<int> best;
    for (const Birack& v : symmetry_variants(b)) {
        std::vector<int> c = canonical_form(v);
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

// ---- constructors ---------------------------------------------------------------

Birack twist(int n) {
    if (n <= 0) throw domain_error("twist needs at least one element");
    Birack b;
    b.n = n;
    b.up.assign(n, identity_perm(n));
    b.dn.assign(n, identity_perm(n));
    return b;
}

Birack alexander(int m, int lambda, int mu) {
    if (m <= 0) throw domain_error("alexander switch needs a positive modulus");
    auto reduce = [m](long long v) { return (int)(((v % m) + m) % m); };
    lambda = reduce(lambda);
    mu = reduce(mu);
    if (std::gcd(lambda, m) != 1)
        throw domain_error("alexander switch: lambda must be a unit mod m");
    if (std::gcd(mu, m) != 1)
        throw domain_error("alexander switch: mu must be a unit mod m");
    Birack b;
    b.n = m;
    b.up.assign(m, Perm(m));
    b.dn.assign(m, Perm(m));
    for (int r = 0; r < m; ++r)
        for (int a = 0; a < m; ++a) {
            b.up[r][a] = reduce((long long)lambda * a +
                                (long long)(1 - (long long)lambda * mu) * r);
            b.dn[r][a] = reduce((long long)mu * a);
        }
    return b;
}

Birack burau(int m, int lambda) { return alexander(m, lambda, 1); }

GroupTable GroupTable::cyclic(int n) {
    if (n <= 0) throw domain_error("cyclic group needs a positive order");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) mul[x][y] = (x + y) % n;
    return from_mul(std::move(mul));
}

GroupTable GroupTable::from_mul(std::vector<std::vector<int>> mul) {
    int n = (int)mul.size();
    if (n == 0) throw domain_error("group table is empty");
    for (const auto& row : mul) {
        if ((int)row.size() != n) throw domain_error("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw domain_error("group table entry out of range");
    }
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = mul[cand][x] == x && mul[x][cand] == x;
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw domain_error("group table has no identity");
    Perm inv(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (mul[x][y] == e && mul[y][x] == e) { inv[x] = y; break; }
        if (inv[x] < 0) throw domain_error("group table has a non-invertible element");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (mul[mul[x][y]][z] != mul[x][mul[y][z]])
                    throw domain_error("group table is not associative");
    GroupTable g;
    g.n = n;
    g.mul = std::move(mul);
    g.identity = e;
    g.inverse = std::move(inv);
    return g;
}

Birack wada(const GroupTable& g) {
    Birack b;
    b.n = g.n;
    b.up.assign(g.n, Perm(g.n));
    b.dn.assign(g.n, Perm(g.n));
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            b.up[x][y] = g.mul[g.mul[x][x]][y];                   // x^2 y
            b.dn[x][y] = g.mul[g.mul[g.inverse[x]][g.inverse[y]]][x];  // x^-1 y^-1 x
        }
    validate_rows(b);
    return b;
}

}  // namespace birack
