#include "hallq/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace hallq {

int Quiver::vertex_index(const std::string& name) const
{
    for (int i = 0; i < (int)vertex_names.size(); ++i)
        if (vertex_names[i] == name) return i;
    return -1;
}

int Quiver::arrow_index(const std::string& name) const
{
    for (int i = 0; i < (int)arrows.size(); ++i)
        if (arrows[i].name == name) return i;
    return -1;
}

int Quiver::arrow_between(int i, int j) const
{
    for (int a = 0; a < (int)arrows.size(); ++a)
        if (arrows[a].source == i && arrows[a].target == j) return a;
    return -1;
}

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

// "<coeff>*<arrow,arrow,...>" -> one relation term
std::pair<long long, std::vector<std::string>> parse_term(const std::string& tok, int lineno)
{
    auto star = tok.find('*');
    if (star == std::string::npos)
        throw hq_error(errc::parse_error,
                       "line " + std::to_string(lineno) + ": relation term needs coeff*arrows");
    long long coeff;
    try {
        size_t used = 0;
        coeff = std::stoll(tok.substr(0, star), &used);
        if (used != star) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw hq_error(errc::parse_error,
                       "line " + std::to_string(lineno) + ": bad coefficient in '" + tok + "'");
    }
    std::vector<std::string> arrow_names;
    std::string rest = tok.substr(star + 1), cur;
    std::istringstream in(rest);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) arrow_names.push_back(cur);
    if (arrow_names.empty())
        throw hq_error(errc::parse_error,
                       "line " + std::to_string(lineno) + ": empty arrow list in '" + tok + "'");
    return {coeff, arrow_names};
}

void check_acyclic(const Quiver& q)
{
    int n = q.num_vertices();
    std::vector<int> state(n, 0); // 0 unvisited, 1 on stack, 2 done
    auto dfs = [&](auto&& self, int v) -> void {
        state[v] = 1;
        for (const Arrow& a : q.arrows) {
            if (a.source != v) continue;
            if (state[a.target] == 1)
                throw hq_error(errc::oriented_cycle,
                               "cycle through vertex " + q.vertex_names[a.target]);
            if (state[a.target] == 0) self(self, a.target);
        }
        state[v] = 2;
    };
    for (int v = 0; v < n; ++v)
        if (state[v] == 0) dfs(dfs, v);
}

} // namespace

BoundQuiver parse_quiver(const std::string& text)
{
    BoundQuiver bq;
    Quiver& q = bq.quiver;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "vertex") {
            if (toks.size() != 2)
                throw hq_error(errc::parse_error, "line " + std::to_string(lineno) + ": vertex <id>");
            if (q.vertex_index(toks[1]) >= 0)
                throw hq_error(errc::parse_error,
                               "line " + std::to_string(lineno) + ": duplicate vertex " + toks[1]);
            q.vertex_names.push_back(toks[1]);
        } else if (kw == "arrow") {
            if (toks.size() != 4)
                throw hq_error(errc::parse_error,
                               "line " + std::to_string(lineno) + ": arrow <id> <src> <tgt>");
            if (q.arrow_index(toks[1]) >= 0)
                throw hq_error(errc::parse_error,
                               "line " + std::to_string(lineno) + ": duplicate arrow " + toks[1]);
            int s = q.vertex_index(toks[2]), t = q.vertex_index(toks[3]);
            if (s < 0 || t < 0)
                throw hq_error(errc::unknown_vertex,
                               "line " + std::to_string(lineno) + ": arrow " + toks[1] +
                                   " references undeclared vertex");
            if (s == t)
                throw hq_error(errc::loop_found,
                               "line " + std::to_string(lineno) + ": loop at " + toks[2]);
            if (q.arrow_between(s, t) >= 0)
                throw hq_error(errc::multiple_arrow,
                               "line " + std::to_string(lineno) + ": second arrow " + toks[2] +
                                   " -> " + toks[3]);
            q.arrows.push_back({toks[1], s, t});
        } else if (kw == "relation") {
            Relation rel;
            bool expect_term = true;
            for (size_t k = 1; k < toks.size(); ++k) {
                if (!expect_term) {
                    if (toks[k] != "+")
                        throw hq_error(errc::parse_error,
                                       "line " + std::to_string(lineno) + ": expected '+'");
                    expect_term = true;
                    continue;
                }
                auto [coeff, arrow_names] = parse_term(toks[k], lineno);
                Path path;
                for (size_t a = 0; a < arrow_names.size(); ++a) {
                    int idx = q.arrow_index(arrow_names[a]);
                    if (idx < 0)
                        throw hq_error(errc::parse_error,
                                       "line " + std::to_string(lineno) + ": unknown arrow " +
                                           arrow_names[a]);
                    if (a == 0)
                        path.source = q.arrows[idx].source;
                    else if (q.arrows[idx].source != path.target)
                        throw hq_error(errc::bad_relation,
                                       "line " + std::to_string(lineno) +
                                           ": arrows do not compose at " + arrow_names[a]);
                    path.target = q.arrows[idx].target;
                    path.arrows.push_back(idx);
                }
                if (path.length() < 2)
                    throw hq_error(errc::bad_relation,
                                   "line " + std::to_string(lineno) + ": path shorter than 2");
                rel.terms.emplace_back(coeff, path);
                expect_term = false;
            }
            if (expect_term)
                throw hq_error(errc::parse_error,
                               "line " + std::to_string(lineno) + ": relation needs a term");
            rel.source = rel.terms[0].second.source;
            rel.target = rel.terms[0].second.target;
            for (const auto& [c, path] : rel.terms)
                if (path.source != rel.source || path.target != rel.target)
                    throw hq_error(errc::bad_relation,
                                   "line " + std::to_string(lineno) + ": terms mix endpoints");
            bool nonzero = false;
            for (const auto& [c, path] : rel.terms) nonzero |= (c != 0);
            if (!nonzero)
                throw hq_error(errc::bad_relation,
                               "line " + std::to_string(lineno) + ": all coefficients zero");
            bq.relations.push_back(std::move(rel));
        } else {
            throw hq_error(errc::parse_error,
                           "line " + std::to_string(lineno) + ": unknown keyword " + kw);
        }
    }
    check_acyclic(q);
    return bq;
}

std::string serialize_quiver(const BoundQuiver& bq)
{
    const Quiver& q = bq.quiver;
    std::ostringstream out;
    for (const std::string& v : q.vertex_names) out << "vertex " << v << "\n";
    for (const Arrow& a : q.arrows)
        out << "arrow " << a.name << " " << q.vertex_names[a.source] << " "
            << q.vertex_names[a.target] << "\n";
    for (const Relation& rel : bq.relations) {
        out << "relation";
        for (size_t k = 0; k < rel.terms.size(); ++k) {
            if (k) out << " +";
            out << " " << rel.terms[k].first << "*";
            const Path& path = rel.terms[k].second;
            for (size_t a = 0; a < path.arrows.size(); ++a) {
                if (a) out << ",";
                out << q.arrows[path.arrows[a]].name;
            }
        }
        out << "\n";
    }
    return out.str();
}

std::vector<Path> enumerate_paths(const Quiver& q, int i, int j)
{
    std::vector<Path> found;
    Path cur{i, i, {}};
    auto dfs = [&](auto&& self) -> void {
        if (cur.target == j) found.push_back(cur);
        for (int a = 0; a < (int)q.arrows.size(); ++a) {
            if (q.arrows[a].source != cur.target) continue;
            int saved = cur.target;
            cur.arrows.push_back(a);
            cur.target = q.arrows[a].target;
            self(self);
            cur.arrows.pop_back();
            cur.target = saved;
        }
    };
    dfs(dfs);
    std::sort(found.begin(), found.end(), [](const Path& x, const Path& y) {
        if (x.length() != y.length()) return x.length() < y.length();
        return x.arrows < y.arrows;
    });
    return found;
}

std::vector<int> relation_counts(const BoundQuiver& bq)
{
    int n = bq.quiver.num_vertices();
    std::vector<int> r(size_t(n) * n, 0);
    for (const Relation& rel : bq.relations) r[size_t(rel.source) * n + rel.target] += 1;
    return r;
}

} // namespace hallq
