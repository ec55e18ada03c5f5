#include "hallq/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hallq {

namespace {

uint64_t fnv1a(const std::string& s)
{
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

OrderedJson matrix_to_json(const MatrixFp& m)
{
    OrderedJson j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["a"] = m.a;
    return j;
}

MatrixFp matrix_from_json(const OrderedJson& j, uint32_t p)
{
    MatrixFp m(j.at("rows").get<int>(), j.at("cols").get<int>(), p);
    m.a = j.at("a").get<std::vector<uint32_t>>();
    if (m.a.size() != size_t(m.rows) * size_t(m.cols))
        throw hq_error(errc::parse_error, "matrix entry count does not match its shape");
    return m;
}

} // namespace

std::string canonical_quiver_text(const BoundQuiver& bq)
{
    std::ostringstream os;
    for (const std::string& v : bq.quiver.vertex_names) os << "vertex " << v << "\n";
    for (const Arrow& a : bq.quiver.arrows)
        os << "arrow " << a.name << " " << bq.quiver.vertex_names[a.source] << " "
           << bq.quiver.vertex_names[a.target] << "\n";
    for (const Relation& rel : bq.relations) {
        os << "relation ";
        for (size_t t = 0; t < rel.terms.size(); ++t) {
            if (t) os << " + ";
            os << rel.terms[t].first << "*";
            const Path& path = rel.terms[t].second;
            for (size_t k = 0; k < path.arrows.size(); ++k)
                os << (k ? "," : "") << bq.quiver.arrows[path.arrows[k]].name;
        }
        os << "\n";
    }
    return os.str();
}

std::string cache_key(const BoundQuiver& bq, int p, const EnumCaps& caps)
{
    std::ostringstream os;
    os << canonical_quiver_text(bq) << "|p=" << p << "|cc=" << caps.component_cap
       << "|tc=" << caps.total_cap << "|tu=" << caps.tuple_cap << "|ec=" << caps.end_cap;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(os.str()));
    return buf;
}

OrderedJson table_to_json(const IndecompTable& table)
{
    OrderedJson j;
    j["p"] = table.p;
    j["entries"] = OrderedJson::array();
    for (const IndecEntry& e : table.entries) {
        OrderedJson je;
        je["dim"] = e.dim;
        je["end_dim"] = e.end_dim;
        je["end_count"] = e.end_count.str();
        je["aut_count"] = e.aut_count.str();
        je["mats"] = OrderedJson::array();
        for (const MatrixFp& m : e.rep.mats) je["mats"].push_back(matrix_to_json(m));
        j["entries"].push_back(std::move(je));
    }
    j["hom"] = table.hom;
    j["ext1"] = table.ext1;
    j["ext2"] = table.ext2;
    j["bijection_ok"] = table.bijection_ok;
    j["missing_roots"] = table.missing_roots;
    j["extra_dims"] = table.extra_dims;
    return j;
}

IndecompTable table_from_json(const OrderedJson& j)
{
    IndecompTable table;
    table.p = j.at("p").get<int>();
    for (const OrderedJson& je : j.at("entries")) {
        IndecEntry e;
        e.dim = je.at("dim").get<DimVector>();
        e.end_dim = je.at("end_dim").get<int>();
        e.end_count = BigInt(je.at("end_count").get<std::string>());
        e.aut_count = BigInt(je.at("aut_count").get<std::string>());
        e.rep.p = table.p;
        e.rep.dim = e.dim;
        for (const OrderedJson& jm : je.at("mats"))
            e.rep.mats.push_back(matrix_from_json(jm, (uint32_t)table.p));
        table.entries.push_back(std::move(e));
    }
    table.hom = j.at("hom").get<std::vector<std::vector<int>>>();
    table.ext1 = j.at("ext1").get<std::vector<std::vector<int>>>();
    table.ext2 = j.at("ext2").get<std::vector<std::vector<int>>>();
    table.bijection_ok = j.at("bijection_ok").get<bool>();
    table.missing_roots = j.at("missing_roots").get<std::vector<DimVector>>();
    table.extra_dims = j.at("extra_dims").get<std::vector<DimVector>>();
    return table;
}

IndecompTable cached_indecomposables(const std::string& cache_dir, const BoundQuiver& bq,
                                     int p, const RootSet& roots, const EnumCaps& caps)
{
    if (cache_dir.empty()) return enumerate_indecomposables(bq, p, roots, caps);

    namespace fs = std::filesystem;
    fs::path file = fs::path(cache_dir) / ("indecs-" + cache_key(bq, p, caps) + ".json");
    if (fs::exists(file)) {
        try {
            std::ifstream in(file);
            OrderedJson j = OrderedJson::parse(in);
            return table_from_json(j);
        } catch (const std::exception&) {
            // fall through and recompute over the unreadable entry
        }
    }
    IndecompTable table = enumerate_indecomposables(bq, p, roots, caps);
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    std::ofstream out(file);
    out << table_to_json(table).dump(2) << "\n";
    return table;
}

} // namespace hallq
