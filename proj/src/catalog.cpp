#include "birack/catalog.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace birack {

using nlohmann::json;

const CatalogEntry* Catalog::find(const std::string& name) const {
    for (const CatalogEntry& e : entries) {
        if (e.name == name) return &e;
        for (const std::string& a : e.aliases)
            if (a == name) return &e;
    }
    return nullptr;
}

const CatalogEntry& Catalog::at(const std::string& name) const {
    const CatalogEntry* e = find(name);
    if (!e) throw domain_error("no catalog entry named '" + name + "'");
    return *e;
}

// ---- paper text -------------------------------------------------------------

namespace {

constexpr const char* kIota = "ι";  // ι

bool row_is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != (int)i) return false;
    return true;
}

std::string format_row(const Perm& p) {
    if (row_is_identity(p)) return kIota;
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (size_t start = 0; start < p.size(); ++start) {
        if (seen[start] || p[start] == (int)start) continue;
        out += '(';
        size_t cur = start;
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(cur + 1);  // 1-based labels
            seen[cur] = 1;
            cur = p[cur];
            first = false;
        } while (cur != start);
        out += ')';
    }
    return out;
}

std::string format_table(const std::vector<Perm>& rows) {
    bool trivial = true;
    for (const Perm& r : rows) trivial = trivial && row_is_identity(r);
    if (trivial) return kIota;
    std::string out = "(";
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) out += ", ";
        out += format_row(rows[r]);
    }
    out += ")";
    return out;
}

// name grammar: (BQ|BR|Q|R) n (_|c) index
struct NameParts {
    StructureClass cls;
    int n;
};

NameParts parse_name(const std::string& name) {
    size_t p = 0;
    StructureClass cls;
    if (name.rfind("BQ", 0) == 0) { cls = StructureClass::biquandle; p = 2; }
    else if (name.rfind("BR", 0) == 0) { cls = StructureClass::birack; p = 2; }
    else if (name.rfind("Q", 0) == 0) { cls = StructureClass::quandle; p = 1; }
    else if (name.rfind("R", 0) == 0) { cls = StructureClass::rack; p = 1; }
    else throw validation_error("entry name '" + name +
                                "' does not start with Q, R, BQ or BR");
    size_t digits = p;
    while (digits < name.size() && std::isdigit((unsigned char)name[digits]))
        ++digits;
    if (digits == p)
        throw validation_error("entry name '" + name +
                               "' is missing the element count");
    return {cls, std::stoi(name.substr(p, digits - p))};
}

std::vector<std::string> flags_of(const Classification& c) {
    std::vector<std::string> out;
    if (c.flag_s) out.push_back("S");
    if (c.flag_pq) out.push_back("PQ");
    if (c.flag_dpq) out.push_back("DPQ");
    return out;
}

void check_entry(const CatalogEntry& e) {
    validate_rows(e.table);
    NameParts parts = parse_name(e.name);
    if (parts.n != e.table.n)
        throw validation_error("entry '" + e.name + "' is named for " +
                               std::to_string(parts.n) + " elements but has " +
                               std::to_string(e.table.n));
    Classification computed = classify(e.table);
    if (computed != e.cls)
        throw validation_error("entry '" + e.name +
                               "' classification does not match its table");
    if (computed.cls != parts.cls)
        throw validation_error("entry '" + e.name + "' is a " +
                               class_name(computed.cls) +
                               " but its name says otherwise");
}

}  // namespace

void validate_catalog(const Catalog& c) {
    std::set<std::string> names;
    for (const CatalogEntry& e : c.entries) {
        check_entry(e);
        if (!names.insert(e.name).second)
            throw validation_error("duplicate catalog name '" + e.name + "'");
        for (const std::string& a : e.aliases)
            if (!names.insert(a).second)
                throw validation_error("duplicate catalog name '" + a + "'");
    }
    // no two entries may be the same table up to relabeling
    std::map<std::vector<int>, const CatalogEntry*> canon;
    for (const CatalogEntry& e : c.entries) {
        auto [it, fresh] = canon.emplace(canonical_form(e.table), &e);
        if (!fresh)
            throw validation_error("entries '" + it->second->name + "' and '" +
                                   e.name + "' coincide up to relabeling");
    }
}

std::string paper_line(const CatalogEntry& e) {
    std::ostringstream out;
    out << e.name << " U=" << format_table(e.table.up)
        << " D=" << format_table(e.table.dn) << " order " << e.cls.order << ' '
        << e.cls.flags_prefix() << "c1 = " << e.cls.c1 << ", c2 = " << e.cls.c2;
    return out.str();
}

std::string catalog_to_paper_text(const Catalog& c) {
    std::ostringstream out;
    for (const CatalogEntry& e : c.entries) {
        out << paper_line(e) << '\n';
        for (const std::string& a : e.aliases)
            out << "# alias " << e.name << ' ' << a << '\n';
    }
    return out.str();
}

namespace {

struct TextCursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool consume(const std::string& lit) {
        if (s.compare(pos, lit.size(), lit) == 0) {
            pos += lit.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& lit, const std::string& what) {
        if (!consume(lit))
            throw parse_error("expected " + what + " in catalog line", pos);
    }
    int integer() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw parse_error("expected a number", pos);
        return std::stoi(s.substr(start, pos - start));
    }
};

Perm parse_cycles(TextCursor& c, int n) {
    Perm p = identity_perm(n);
    while (c.pos < c.s.size() && c.s[c.pos] == '(') {
        ++c.pos;
        std::vector<int> cyc;
        c.skip_ws();
        while (c.pos < c.s.size() && c.s[c.pos] != ')') {
            int v = c.integer();
            if (v < 1 || v > n)
                throw parse_error("cycle entry out of range", c.pos);
            cyc.push_back(v - 1);
            c.skip_ws();
        }
        c.expect(")", "')'");
        for (size_t i = 0; i < cyc.size(); ++i)
            p[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    return p;
}

std::vector<Perm> parse_table(TextCursor& c, int n) {
    c.skip_ws();
    if (c.consume(kIota)) return std::vector<Perm>(n, identity_perm(n));
    c.expect("(", "a table");
    std::vector<Perm> rows;
    for (int r = 0; r < n; ++r) {
        c.skip_ws();
        if (c.consume(kIota))
            rows.push_back(identity_perm(n));
        else
            rows.push_back(parse_cycles(c, n));
        c.skip_ws();
        if (r + 1 < n) c.expect(",", "','");
    }
    c.expect(")", "')' closing the table");
    return rows;
}

CatalogEntry parse_paper_line(const std::string& line) {
    TextCursor c{line};
    c.skip_ws();
    size_t name_start = c.pos;
    while (c.pos < line.size() && !std::isspace((unsigned char)line[c.pos]))
        ++c.pos;
    CatalogEntry e;
    e.name = line.substr(name_start, c.pos - name_start);
    NameParts parts = parse_name(e.name);
    int n = parts.n;
    c.skip_ws();
    c.expect("U=", "'U='");
    e.table.n = n;
    e.table.up = parse_table(c, n);
    c.skip_ws();
    c.expect("D=", "'D='");
    e.table.dn = parse_table(c, n);
    c.skip_ws();
    c.expect("order", "'order'");
    c.skip_ws();
    int order = c.integer();
    std::vector<std::string> flags;
    for (;;) {
        c.skip_ws();
        if (c.s.compare(c.pos, 2, "c1") == 0) break;
        size_t start = c.pos;
        while (c.pos < c.s.size() && c.s[c.pos] != ',') ++c.pos;
        std::string flag = c.s.substr(start, c.pos - start);
        while (!flag.empty() && flag.back() == ' ') flag.pop_back();
        if (flag != "S" && flag != "PQ" && flag != "DPQ")
            throw parse_error("unknown flag '" + flag + "'", start);
        flags.push_back(flag);
        c.expect(",", "',' after flag");
    }
    c.expect("c1", "'c1'");
    c.skip_ws(); c.expect("=", "'='"); c.skip_ws();
    int c1 = c.integer();
    c.skip_ws(); c.expect(",", "','"); c.skip_ws();
    c.expect("c2", "'c2'");
    c.skip_ws(); c.expect("=", "'='"); c.skip_ws();
    int c2 = c.integer();

    e.cls = classify(e.table);
    std::vector<std::string> computed_flags = flags_of(e.cls);
    if (e.cls.order != order || e.cls.c1 != c1 || e.cls.c2 != c2 ||
        computed_flags != flags)
        throw validation_error("entry '" + e.name +
                               "' does not match its stated invariants");
    return e;
}

}  // namespace

Catalog catalog_from_paper_text(const std::string& text) {
    Catalog c;
    std::vector<std::pair<std::string, std::string>> aliases;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::istringstream meta(line.substr(first + 1));
            std::string kw, name, alias;
            if (meta >> kw >> name >> alias && kw == "alias")
                aliases.emplace_back(name, alias);
            continue;
        }
        c.entries.push_back(parse_paper_line(line));
    }
    for (auto& [name, alias] : aliases) {
        bool found = false;
        for (CatalogEntry& e : c.entries)
            if (e.name == name) {
                e.aliases.push_back(alias);
                found = true;
                break;
            }
        if (!found)
            throw validation_error("alias line for unknown entry '" + name + "'");
    }
    validate_catalog(c);
    return c;
}

// ---- json ---------------------------------------------------------------------

namespace {

json table_to_json(const std::vector<Perm>& rows) {
    json out = json::array();
    for (const Perm& r : rows) {
        json row = json::array();
        for (int v : r) row.push_back(v + 1);  // 1-based on disk
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<Perm> table_from_json(const json& j, int n) {
    if (!j.is_array() || (int)j.size() != n)
        throw validation_error("table must have n rows");
    std::vector<Perm> rows;
    for (const json& jr : j) {
        if (!jr.is_array() || (int)jr.size() != n)
            throw validation_error("table row must have n entries");
        Perm r;
        for (const json& v : jr) {
            int x = v.get<int>();
            if (x < 1 || x > n)
                throw validation_error("table entry out of range");
            r.push_back(x - 1);
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

std::string catalog_to_json(const Catalog& c) {
    json arr = json::array();
    for (const CatalogEntry& e : c.entries) {
        json j;
        j["n"] = e.table.n;
        j["name"] = e.name;
        j["aliases"] = e.aliases;
        j["class"] = class_name(e.cls.cls);
        j["flags"] = flags_of(e.cls);
        j["order"] = e.cls.order;
        j["u"] = e.cls.u;
        j["d"] = e.cls.d;
        j["U"] = table_to_json(e.table.up);
        j["D"] = table_to_json(e.table.dn);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

Catalog catalog_from_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("catalog is not valid JSON: ") + e.what(),
                          e.byte);
    }
    if (!arr.is_array())
        throw validation_error("catalog JSON must be an array of entries");
    Catalog c;
    for (const json& j : arr) {
        CatalogEntry e;
        e.name = j.at("name").get<std::string>();
        int n = j.at("n").get<int>();
        e.table.n = n;
        e.table.up = table_from_json(j.at("U"), n);
        e.table.dn = table_from_json(j.at("D"), n);
        if (j.contains("aliases"))
            e.aliases = j.at("aliases").get<std::vector<std::string>>();
        e.cls = classify(e.table);
        if (j.at("class").get<std::string>() != class_name(e.cls.cls) ||
            j.at("order").get<int>() != e.cls.order ||
            j.at("u").get<int>() != e.cls.u || j.at("d").get<int>() != e.cls.d ||
            j.at("flags").get<std::vector<std::string>>() != flags_of(e.cls))
            throw validation_error("entry '" + e.name +
                                   "' does not match its stated invariants");
        c.entries.push_back(std::move(e));
    }
    validate_catalog(c);
    return c;
}

// ---- files ----------------------------------------------------------------------

std::string resolve_catalog_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("BIRACK_CATALOG_DIR"); dir && *dir) {
        fs::path alt = fs::path(dir) / path;
        if (fs::exists(alt)) return alt.string();
    }
    return path;
}

void save_catalog(const Catalog& c, const std::string& path, CatalogFormat f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write catalog file '" + path + "'");
    out << (f == CatalogFormat::json ? catalog_to_json(c)
                                     : catalog_to_paper_text(c));
}

Catalog load_catalog(const std::string& path) {
    std::string resolved = resolve_catalog_path(path);
    std::ifstream in(resolved, std::ios::binary);
    if (!in) throw domain_error("cannot open catalog file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
        return catalog_from_json(text);
    return catalog_from_paper_text(text);
}

}  // namespace birack
