#include "birack/braid.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "birack/kernels.hpp"

namespace birack::braid {

Word parse(const std::string& text, std::vector<std::string>* warnings) {
    Word w;
    size_t i = 0, len = text.size();
    while (i < len) {
        if (std::isspace((unsigned char)text[i])) { ++i; continue; }
        size_t start = i;
        while (i < len && !std::isspace((unsigned char)text[i])) ++i;
        std::string tok = text.substr(start, i - start);
        size_t p = 0;
        int sign = 1;
        if (tok[p] == '-') { sign = -1; ++p; }
        if (p >= tok.size() || (tok[p] != 's' && tok[p] != 't'))
            throw parse_error("expected 's' or 't' in '" + tok + "'", start);
        bool is_virtual = tok[p] == 't';
        ++p;
        size_t digit_start = p;
        while (p < tok.size() && std::isdigit((unsigned char)tok[p])) ++p;
        if (p == digit_start)
            throw parse_error("missing strand index in '" + tok + "'", start);
        int index = std::stoi(tok.substr(digit_start, p - digit_start));
        if (index < 1)
            throw parse_error("strand index must be at least 1 in '" + tok + "'",
                              start);
        int repeat = 1;
        if (p < tok.size() && tok[p] == '^') {
            ++p;
            size_t pow_start = p;
            while (p < tok.size() && std::isdigit((unsigned char)tok[p])) ++p;
            if (p == pow_start || p != tok.size())
                throw parse_error("malformed power suffix in '" + tok + "'",
                                  start);
            repeat = std::stoi(tok.substr(pow_start));
            if (repeat < 1)
                throw parse_error("power must be positive in '" + tok + "'",
                                  start);
        } else if (p != tok.size()) {
            throw parse_error("trailing garbage in '" + tok + "'", start);
        }
        if (is_virtual && sign == -1) {
            if (warnings)
                warnings->push_back("virtual crossings are self-inverse; '" +
                                    tok + "' read as 't" +
                                    std::to_string(index) + "'");
            sign = 1;
        }
        for (int r = 0; r < repeat; ++r)
            w.letters.push_back({is_virtual, index, sign});
    }
    return w;
}

std::string format(const Word& w) {
    std::string out;
    for (const Letter& l : w.letters) {
        if (!out.empty()) out += ' ';
        if (!l.is_virtual && l.sign < 0) out += '-';
        out += l.is_virtual ? 't' : 's';
        out += std::to_string(l.index);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.declared_strands = w.declared_strands;
    out.letters.assign(w.letters.rbegin(), w.letters.rend());
    for (Letter& l : out.letters)
        if (!l.is_virtual) l.sign = -l.sign;
    return out;
}

namespace {

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    if (!out.declared_strands) out.declared_strands = b.declared_strands;
    return out;
}

}  // namespace

Word power(const Word& w, int k) {
    Word base = k < 0 ? inverse(w) : w;
    int reps = k < 0 ? -k : k;
    Word out;
    out.declared_strands = w.declared_strands;
    for (int i = 0; i < reps; ++i)
        out.letters.insert(out.letters.end(), base.letters.begin(),
                           base.letters.end());
    return out;
}

Word commutator(const Word& x, const Word& y) {
    return concat(concat(inverse(x), inverse(y)), concat(x, y));
}

int writhe(const Word& w) {
    int sum = 0;
    for (const Letter& l : w.letters)
        if (!l.is_virtual) sum += l.sign;
    return sum;
}

int strands(const Word& w) {
    if (w.declared_strands) return *w.declared_strands;
    int max_index = 0;
    for (const Letter& l : w.letters) max_index = std::max(max_index, l.index);
    return max_index + 1;
}

namespace {

// the three crossing maps of a pair, tabulated over X^2
struct CrossingTables {
    std::unique_ptr<kern::PairTable> pos, neg, virt;
};

std::unique_ptr<kern::PairTable> invert_table(const kern::PairTable& t) {
    auto inv = std::make_unique<kern::PairTable>();
    int n = t.n;
    inv->n = n;
    inv->out_a.assign((size_t)n * n, -1);
    inv->out_b.assign((size_t)n * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            size_t src = (size_t)a * n + b;
            size_t dst = (size_t)t.out_a[src] * n + t.out_b[src];
            if (inv->out_a[dst] != -1)
                throw structural_error("crossing map is not invertible");
            inv->out_a[dst] = a;
            inv->out_b[dst] = b;
        }
    return inv;
}

CrossingTables crossing_tables(const SwitchPair& pair) {
    validate_rows(pair.s);
    validate_rows(pair.t);
    if (pair.s.n != pair.t.n)
        throw domain_error("switch and twist act on different color sets");
    const Birack& s = pair.s;
    const Birack& t = pair.t;
    CrossingTables out;
    out.pos = kern::make_pair_table(s.n, [&](int a, int b) {
        return std::pair<int, int>{s.dn[a][b], s.up[b][a]};
    });
    out.neg = invert_table(*out.pos);
    out.virt = kern::make_pair_table(t.n, [&](int a, int b) {
        return std::pair<int, int>{t.dn[a][b], t.up[b][a]};
    });
    return out;
}

void check_fits(const Word& w, int strand_count) {
    for (const Letter& l : w.letters)
        if (l.index + 1 > strand_count)
            throw domain_error("letter " + format(Word{{l}, {}}) +
                               " does not fit on " +
                               std::to_string(strand_count) + " strands");
}

}  // namespace

std::vector<int> evaluate(const Word& w, const SwitchPair& pair,
                          int strand_count, std::vector<int> tuple) {
    if ((int)tuple.size() != strand_count)
        throw domain_error("tuple length does not match the strand count");
    for (int v : tuple)
        if (v < 0 || v >= pair.s.n) throw domain_error("color out of range");
    check_fits(w, strand_count);
    CrossingTables tabs = crossing_tables(pair);
    int n = pair.s.n;
    for (const Letter& l : w.letters) {
        const kern::PairTable& t =
            l.is_virtual ? *tabs.virt : (l.sign > 0 ? *tabs.pos : *tabs.neg);
        int i = l.index - 1;
        size_t idx = (size_t)tuple[i] * n + tuple[i + 1];
        int a = t.out_a[idx], b = t.out_b[idx];
        tuple[i] = a;
        tuple[i + 1] = b;
    }
    return tuple;
}

long long fixed_point_count(const Word& w, const SwitchPair& pair,
                            int strand_count, const CountOptions& opts) {
    if (strand_count < 1) throw domain_error("strand count must be positive");
    check_fits(w, strand_count);
    CrossingTables tabs = crossing_tables(pair);
    kern::CompiledProgram prog;
    prog.strands = strand_count;
    prog.n = pair.s.n;
    const kern::PairTable* pos = prog.add_table(std::move(tabs.pos));
    const kern::PairTable* neg = prog.add_table(std::move(tabs.neg));
    const kern::PairTable* virt = prog.add_table(std::move(tabs.virt));
    for (const Letter& l : w.letters) {
        kern::Op op;
        op.kind = kern::Op::Kind::pair;
        op.pos = l.index - 1;
        op.table = l.is_virtual ? virt : (l.sign > 0 ? pos : neg);
        prog.ops.push_back(std::move(op));
    }
    return kern::count_fixed_tuples(prog.ops, strand_count, prog.n,
                                    opts.budget, opts.workers);
}

Word theorem53_braid() {
    Word phi1 = parse("s4 -s5 -s2 s1");
    Word phi2 = parse("-s4 s5 s5 s2 -s1 -s1");
    Word s3 = parse("s3");
    Word b2 = commutator(concat(concat(inverse(phi1), s3), phi1),
                         concat(concat(inverse(phi2), s3), phi2));
    Word b = concat(b2, parse("t1 s2 t3 t4 t5 t6"));
    Word bbb = power(b, 3);
    bbb.declared_strands = 7;
    return bbb;
}

std::map<std::string, Word> load_words_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open word file '" + path + "'");
    std::map<std::string, Word> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        size_t name_start = line.find_first_not_of(" \t\r");
        if (name_start == std::string::npos) continue;
        size_t name_end = line.find_first_of(" \t\r", name_start);
        std::string name = line.substr(name_start, name_end - name_start);
        std::string rest =
            name_end == std::string::npos ? "" : line.substr(name_end);
        if (out.count(name))
            throw validation_error("duplicate word name '" + name + "' at line " +
                                   std::to_string(lineno) + " of " + path);
        try {
            out.emplace(name, parse(rest));
        } catch (const parse_error& e) {
            throw parse_error(std::string(e.what()) + " (line " +
                                  std::to_string(lineno) + " of " + path + ")",
                              e.position);
        }
    }
    return out;
}

}  // namespace birack::braid
