#include "ezd/io.hpp"

#include <fstream>
#include <sstream>

namespace ezd {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

}  // namespace

RingFile parse_ring_file(const std::string& text) {
    RingFile rf;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    bool saw_field = false, saw_vars = false, in_ideal = false, saw_end = false;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (in_ideal) {
            if (line == "end") {
                in_ideal = false;
                saw_end = true;
            } else {
                rf.relations.push_back(line);
            }
            continue;
        }
        auto words = split_ws(line);
        if (words[0] == "field") {
            if (words.size() != 2 || words[1].rfind("p=", 0) != 0)
                throw ParseError(lineno, "expected `field p=<prime>`");
            try {
                rf.p = static_cast<std::uint32_t>(std::stoul(words[1].substr(2)));
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad prime in field line");
            }
            if (rf.p < 2) throw ParseError(lineno, "bad prime in field line");
            saw_field = true;
        } else if (words[0] == "vars") {
            if (words.size() < 2) throw ParseError(lineno, "vars line needs at least one name");
            rf.vars.assign(words.begin() + 1, words.end());
            saw_vars = true;
        } else if (words[0] == "order") {
            if (words.size() != 2 || (words[1] != "degrevlex" && words[1] != "lex"))
                throw ParseError(lineno, "order must be degrevlex or lex");
            rf.order = order_from_string(words[1]);
        } else if (words[0] == "ideal") {
            if (words.size() != 1) throw ParseError(lineno, "ideal takes no arguments");
            in_ideal = true;
        } else {
            throw ParseError(lineno, "unknown key `" + words[0] + "`");
        }
    }
    if (in_ideal) throw ParseError(lineno, "unterminated ideal block");
    if (!saw_field) throw ParseError(lineno, "missing field line");
    if (!saw_vars) throw ParseError(lineno, "missing vars line");
    if (!saw_end) throw ParseError(lineno, "missing ideal block");
    return rf;
}

ModuleFile parse_module_file(const std::string& text) {
    ModuleFile mf;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    bool saw_module = false, in_relations = false, saw_end = false;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (in_relations) {
            if (line == "end") {
                in_relations = false;
                saw_end = true;
                continue;
            }
            if (line.front() != '[' || line.back() != ']')
                throw ParseError(lineno, "relation must be a bracketed vector");
            std::string body = line.substr(1, line.size() - 2);
            std::vector<std::string> entries;
            std::string cur;
            for (char c : body) {
                if (c == ',') {
                    entries.push_back(trim(cur));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            entries.push_back(trim(cur));
            if (entries.size() != mf.rank)
                throw ParseError(lineno, "relation has " + std::to_string(entries.size()) +
                                             " entries, expected " + std::to_string(mf.rank));
            mf.columns.push_back(entries);
            continue;
        }
        auto words = split_ws(line);
        if (words[0] == "module") {
            if (words.size() != 2 || words[1].rfind("rank=", 0) != 0)
                throw ParseError(lineno, "expected `module rank=<n>`");
            try {
                mf.rank = std::stoul(words[1].substr(5));
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad rank");
            }
            saw_module = true;
        } else if (words[0] == "relations") {
            if (!saw_module) throw ParseError(lineno, "relations before module line");
            in_relations = true;
        } else {
            throw ParseError(lineno, "unknown key `" + words[0] + "`");
        }
    }
    if (in_relations) throw ParseError(lineno, "unterminated relations block");
    if (!saw_module) throw ParseError(lineno, "missing module line");
    if (!saw_end) throw ParseError(lineno, "missing relations block");
    return mf;
}

std::string print_ring_file(const RingFile& rf) {
    std::ostringstream os;
    os << "field p=" << rf.p << '\n';
    os << "vars";
    for (auto& v : rf.vars) os << ' ' << v;
    os << '\n';
    os << "order " << order_to_string(rf.order) << '\n';
    os << "ideal\n";
    for (auto& r : rf.relations) os << r << '\n';
    os << "end\n";
    return os.str();
}

std::string print_module_file(const ModuleFile& mf) {
    std::ostringstream os;
    os << "module rank=" << mf.rank << '\n';
    os << "relations\n";
    for (auto& col : mf.columns) {
        os << '[';
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (i) os << ", ";
            os << col[i];
        }
        os << "]\n";
    }
    os << "end\n";
    return os.str();
}

AlgebraPtr ring_from_file(const RingFile& rf, std::uint32_t prime) {
    return from_presentation(rf.vars, rf.relations, prime ? prime : rf.p, rf.order);
}

ModulePresentation module_from_file(const ModuleFile& mf, const AlgebraPtr& alg) {
    ModulePresentation p;
    p.alg = alg;
    p.rank = mf.rank;
    for (auto& col : mf.columns) {
        std::vector<AlgElement> entries;
        for (auto& e : col) entries.push_back(alg->element(e));
        p.columns.push_back(entries);
    }
    return p;
}

ModuleFile module_file_of(const ModulePresentation& p) {
    ModuleFile mf;
    mf.rank = p.rank;
    for (auto& col : p.columns) {
        std::vector<std::string> entries;
        for (auto& e : col) entries.push_back(p.alg->to_string(e));
        mf.columns.push_back(entries);
    }
    return mf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ModulePresentation random_presentation(const AlgebraPtr& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> rank_d(1, 3), cols_d(0, 4),
        entry_d(0, a->dim() - 1);
    ModulePresentation p;
    p.alg = a;
    p.rank = rank_d(rng);
    const std::size_t ncols = cols_d(rng);
    for (std::size_t c = 0; c < ncols; ++c) {
        std::vector<AlgElement> col;
        for (std::size_t r = 0; r < p.rank; ++r) {
            const std::size_t pick = entry_d(rng);
            if (pick == 0) {
                col.push_back(a->zero());
            } else {
                Matrix v(a->dim(), 1, a->prime());
                v(pick, 0) = 1;
                col.push_back(a->element(v));
            }
        }
        p.columns.push_back(col);
    }
    return p;
}

}  // namespace ezd
