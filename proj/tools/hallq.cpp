#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hallq/gallery.hpp"
#include "hallq/hall.hpp"
#include "hallq/report.hpp"

using namespace hallq;

namespace {

struct Config {
    std::string file;
    int q = 3;
    int dim_cap = 6;
    int root_cap = 6;
    int degree_bound = 4;
    std::string format = "text";
    std::string cache_dir;
    int rho_bound = 5;
    int sample = 1;
    int chain_length = 4;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw hq_error(errc::parse_error, "cannot open input file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

EnumCaps caps_of(const Config& cfg)
{
    EnumCaps caps;
    caps.component_cap = 2; // desk scale: roots here have entries 0..2
    caps.total_cap = cfg.dim_cap;
    return caps;
}

std::string dimvec_str(const DimVector& d)
{
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

std::string class_str(const HallTable& H, const IsoClass& cls)
{
    if (cls.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < cls.size(); ++i) {
        if (i) s += "+";
        s += dimvec_str(H.indecs().entries[cls[i]].dim);
    }
    return s;
}

OrderedJson class_json(const HallTable& H, const IsoClass& cls)
{
    OrderedJson j = OrderedJson::array();
    for (int k : cls) j.push_back(H.indecs().entries[k].dim);
    return j;
}

void emit(const Config& cfg, const OrderedJson& j, const std::vector<std::string>& lines)
{
    if (cfg.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const std::string& line : lines) std::cout << line << "\n";
    }
}

OrderedJson form_matrix(const UnitForm& T)
{
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < T.n; ++i) {
        OrderedJson row = OrderedJson::array();
        for (int j = 0; j < T.n; ++j) row.push_back(i == j ? 1 : T.aij(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- analyze ---------------------------------------------------------

int cmd_analyze(const Config& cfg)
{
    BoundQuiver bq = parse_quiver(read_file(cfg.file));
    UnitForm T = unit_form_of(bq);
    int gd = gldim(bq, cfg.q);
    if (gd > 2)
        throw hq_error(errc::global_dimension_too_large,
                       "global dimension " + std::to_string(gd) + " exceeds 2");
    bool weak = is_weakly_positive(T, cfg.root_cap);
    RootSet roots = positive_roots(T, cfg.root_cap);
    RConsistencyReport rc = r_consistency(bq, cfg.q);

    OrderedJson j;
    j["command"] = "analyze";
    j["vertices"] = bq.quiver.num_vertices();
    j["arrows"] = bq.quiver.arrows.size();
    j["relations"] = bq.relations.size();
    j["unit_form"] = form_matrix(T);
    j["gldim"] = gd;
    j["weakly_positive"] = weak;
    j["root_cap"] = cfg.root_cap;
    j["roots"] = roots.roots;
    j["r_consistency_ok"] = rc.ok;
    j["r_consistency_mismatches"] = rc.mismatches;
    j["passed"] = rc.ok;

    std::vector<std::string> lines;
    lines.push_back("vertices: " + std::to_string(bq.quiver.num_vertices()));
    lines.push_back("arrows: " + std::to_string(bq.quiver.arrows.size()));
    lines.push_back("relations: " + std::to_string(bq.relations.size()));
    lines.push_back("global dimension: " + std::to_string(gd));
    lines.push_back(std::string("weakly positive in the box: ") + (weak ? "yes" : "no"));
    std::string rl = "positive roots (cap " + std::to_string(cfg.root_cap) + "):";
    for (const DimVector& r : roots.roots) rl += " " + dimvec_str(r);
    lines.push_back(rl);
    lines.push_back(std::string("relation counts match second extensions: ") +
                    (rc.ok ? "yes" : "no"));
    emit(cfg, j, lines);
    return rc.ok ? 0 : 1;
}

// ---- roots -----------------------------------------------------------

int cmd_roots(const Config& cfg)
{
    BoundQuiver bq = parse_quiver(read_file(cfg.file));
    UnitForm T = unit_form_of(bq);
    RootSet roots = positive_roots(T, cfg.root_cap);

    OrderedJson j;
    j["command"] = "roots";
    j["root_cap"] = cfg.root_cap;
    j["count"] = roots.roots.size();
    j["roots"] = roots.roots;
    j["weakly_positive"] = is_weakly_positive(T, cfg.root_cap);

    std::vector<std::string> lines;
    lines.push_back("count: " + std::to_string(roots.roots.size()));
    for (const DimVector& r : roots.roots) lines.push_back("  " + dimvec_str(r));
    emit(cfg, j, lines);
    return 0;
}

// ---- indecomposables -------------------------------------------------

OrderedJson table_summary(const IndecompTable& table)
{
    OrderedJson j;
    j["count"] = table.entries.size();
    j["entries"] = OrderedJson::array();
    for (const IndecEntry& e : table.entries) {
        OrderedJson je;
        je["dim"] = e.dim;
        je["end_dim"] = e.end_dim;
        je["aut_count"] = e.aut_count.str();
        j["entries"].push_back(std::move(je));
    }
    j["bijection_ok"] = table.bijection_ok;
    j["missing_roots"] = table.missing_roots;
    j["extra_dims"] = table.extra_dims;
    return j;
}

int cmd_indecomposables(const Config& cfg)
{
    BoundQuiver bq = parse_quiver(read_file(cfg.file));
    UnitForm T = unit_form_of(bq);
    IndecompTable table = cached_indecomposables(cfg.cache_dir, bq, cfg.q,
                                                 positive_roots(T, cfg.root_cap), caps_of(cfg));
    // the root bijection is only asserted away from q = 2
    bool passed = table.bijection_ok || cfg.q == 2;

    OrderedJson j;
    j["command"] = "indecomposables";
    j["q"] = cfg.q;
    j["dim_cap"] = cfg.dim_cap;
    j.update(table_summary(table));
    j["passed"] = passed;

    std::vector<std::string> lines;
    lines.push_back("indecomposables: " + std::to_string(table.entries.size()));
    for (const IndecEntry& e : table.entries)
        lines.push_back("  dim " + dimvec_str(e.dim) + "  end_dim " +
                        std::to_string(e.end_dim) + "  aut " + e.aut_count.str());
    lines.push_back(std::string("dimension vectors biject onto the roots: ") +
                    (table.bijection_ok ? "yes" : "no"));
    emit(cfg, j, lines);
    return passed ? 0 : 1;
}

// ---- hall-table ------------------------------------------------------

int cmd_hall_table(const Config& cfg)
{
    BoundQuiver bq = parse_quiver(read_file(cfg.file));
    UnitForm T = unit_form_of(bq);
    IndecompTable table = cached_indecomposables(cfg.cache_dir, bq, cfg.q,
                                                 positive_roots(T, cfg.root_cap), caps_of(cfg));
    HallTable H(bq, table, cfg.degree_bound);

    OrderedJson rows = OrderedJson::array();
    std::vector<std::string> lines;
    std::vector<IsoClass> basis = H.basis();
    for (const IsoClass& M : basis) {
        DimVector dm = H.dim_of(M);
        if (total_dim(dm) == 0) continue;
        for (const IsoClass& N : basis) {
            DimVector dn = H.dim_of(N);
            if (total_dim(dn) == 0) continue;
            if (total_dim(dm) + total_dim(dn) > cfg.degree_bound) continue;
            DimVector dr(dm.size());
            for (size_t i = 0; i < dm.size(); ++i) dr[i] = dm[i] + dn[i];
            long long twist = bilinear(T, dm, dn);
            for (const IsoClass& R : H.classes_of_dim(dr)) {
                long long F = H.hall_number(M, N, R);
                if (F == 0) continue;
                OrderedJson row;
                row["M"] = class_json(H, M);
                row["N"] = class_json(H, N);
                row["R"] = class_json(H, R);
                row["F"] = F;
                row["twist_exponent"] = twist;
                rows.push_back(std::move(row));
                lines.push_back(class_str(H, M) + " * " + class_str(H, N) + " -> " +
                                class_str(H, R) + "  F=" + std::to_string(F) +
                                "  twist=" + std::to_string(twist));
            }
        }
    }

    OrderedJson j;
    j["command"] = "hall-table";
    j["q"] = cfg.q;
    j["degree_bound"] = cfg.degree_bound;
    j["row_count"] = rows.size();
    j["rows"] = std::move(rows);
    lines.push_back("rows: " + std::to_string(j["row_count"].get<size_t>()));
    emit(cfg, j, lines);
    return 0;
}

// ---- presentation ----------------------------------------------------

int cmd_presentation(const Config& cfg)
{
    BoundQuiver bq = parse_quiver(read_file(cfg.file));
    UnitForm T = unit_form_of(bq);
    Presentation P = generate_relations(T, positive_roots(T, cfg.root_cap));

    OrderedJson j;
    j["command"] = "presentation";
    j["roots"] = P.roots.roots.size();
    j["generators"] = OrderedJson::array();
    for (const RelationGen& g : P.gens) {
        OrderedJson jg;
        jg["sequence"] = g.sequence;
        jg["degree"] = g.degree;
        jg["element"] = g.element.str();
        j["generators"].push_back(std::move(jg));
    }
    j["reduced"] = P.reduced;
    j["graded_dims"] = OrderedJson::array();

    std::vector<std::string> lines;
    lines.push_back("roots: " + std::to_string(P.roots.roots.size()));
    lines.push_back("relation generators: " + std::to_string(P.gens.size()) +
                    " (independent: " + std::to_string(P.reduced.size()) + ")");
    for (const RelationGen& g : P.gens) {
        std::string s = "  ad";
        for (int i : g.sequence) s += "." + std::to_string(i + 1);
        lines.push_back(s + "  degree " + dimvec_str(g.degree));
    }

    int n = T.n;
    DimVector alpha(n, 0);
    while (true) {
        int i = 0;
        while (i < n && alpha[i] == cfg.degree_bound) alpha[i++] = 0;
        if (i == n) break;
        ++alpha[i];
        if (total_dim(alpha) > cfg.degree_bound || total_dim(alpha) == 0) continue;
        int d = graded_dimension(P, alpha);
        if (d == 0) continue;
        OrderedJson jd;
        jd["alpha"] = alpha;
        jd["dim"] = d;
        j["graded_dims"].push_back(std::move(jd));
        lines.push_back("  dim at " + dimvec_str(alpha) + ": " + std::to_string(d));
    }
    emit(cfg, j, lines);
    return 0;
}

// ---- verify-rho ------------------------------------------------------

OrderedJson rho_json(const HallTable& H, const RhoReport& report)
{
    OrderedJson j;
    j["relations_checked"] = report.relations_checked;
    j["homomorphism_ok"] = report.homomorphism_ok;
    j["failed_relations"] = OrderedJson::array();
    for (const RhoFailure& f : report.failed_relations) {
        OrderedJson jf;
        jf["sequence"] = f.sequence;
        jf["degree"] = f.degree;
        OrderedJson terms = OrderedJson::array();
        for (const auto& [cls, coeff] : f.image.terms) {
            OrderedJson jt;
            jt["class"] = class_json(H, cls);
            jt["coefficient"] = coeff.str();
            terms.push_back(std::move(jt));
        }
        jf["image"] = std::move(terms);
        j["failed_relations"].push_back(std::move(jf));
    }
    j["isomorphism_checked"] = report.isomorphism_checked;
    j["degrees_checked"] = report.degrees_checked;
    j["isomorphism_ok"] = report.isomorphism_ok;
    j["dim_mismatches"] = OrderedJson::array();
    for (const RhoDimMismatch& m : report.dim_mismatches) {
        OrderedJson jm;
        jm["alpha"] = m.alpha;
        jm["presentation_dim"] = m.presentation_dim;
        jm["hall_dim"] = m.hall_dim;
        j["dim_mismatches"].push_back(std::move(jm));
    }
    j["passed"] = report.ok();
    return j;
}

void rho_text(const HallTable& H, const RhoReport& report, std::vector<std::string>& lines)
{
    lines.push_back("relation generators checked: " + std::to_string(report.relations_checked));
    lines.push_back(std::string("all relations map to zero: ") +
                    (report.homomorphism_ok ? "yes" : "no"));
    for (const RhoFailure& f : report.failed_relations) {
        std::string s = "  nonzero image for ad";
        for (int i : f.sequence) s += "." + std::to_string(i + 1);
        s += " of degree " + dimvec_str(f.degree) + ":";
        for (const auto& [cls, coeff] : f.image.terms)
            s += " (" + coeff.str() + ")*[" + class_str(H, cls) + "]";
        lines.push_back(s);
    }
    if (report.isomorphism_checked) {
        lines.push_back("graded dimensions compared: " +
                        std::to_string(report.degrees_checked));
        lines.push_back(std::string("dimensions all match: ") +
                        (report.isomorphism_ok ? "yes" : "no"));
        for (const RhoDimMismatch& m : report.dim_mismatches)
            lines.push_back("  degree " + dimvec_str(m.alpha) + ": presentation " +
                            std::to_string(m.presentation_dim) + ", hall basis " +
                            std::to_string(m.hall_dim));
    } else {
        lines.push_back("dimension comparison skipped at q = 2");
    }
}

int cmd_verify_rho(const Config& cfg)
{
    BoundQuiver bq = parse_quiver(read_file(cfg.file));
    UnitForm T = unit_form_of(bq);
    RootSet roots = positive_roots(T, cfg.root_cap);
    IndecompTable table = cached_indecomposables(cfg.cache_dir, bq, cfg.q, roots, caps_of(cfg));
    Presentation P = generate_relations(T, roots);
    int sweep = cfg.rho_bound;
    int table_bound = sweep;
    for (const RelationGen& g : P.gens)
        table_bound = std::max(table_bound, total_dim(g.degree));
    HallTable H(bq, table, table_bound);
    RhoReport report = rho_verify(P, H, sweep);

    OrderedJson j;
    j["command"] = "verify-rho";
    j["q"] = cfg.q;
    j["degree_bound"] = sweep;
    j.update(rho_json(H, report));

    std::vector<std::string> lines;
    rho_text(H, report, lines);
    lines.push_back(std::string("verdict: ") + (report.ok() ? "pass" : "fail"));
    emit(cfg, j, lines);
    return report.ok() ? 0 : 1;
}

// ---- examples --------------------------------------------------------

int cmd_examples(const Config& cfg)
{
    GalleryExample ex = gallery_example(cfg.sample, cfg.chain_length);
    const BoundQuiver& bq = ex.quiver;
    UnitForm T = unit_form_of(bq);
    RootSet roots = positive_roots(T, cfg.root_cap);
    IndecompTable table = cached_indecomposables(cfg.cache_dir, bq, cfg.q, roots, caps_of(cfg));
    Presentation P = generate_relations(T, roots);
    GoldenReport goldens = match_goldens(ex, P);

    int table_bound = 5;
    for (const RelationGen& g : P.gens)
        table_bound = std::max(table_bound, total_dim(g.degree));
    HallTable H(bq, table, table_bound);

    // structure-constant sweep within the emission bound
    long long hall_rows = 0;
    std::vector<IsoClass> basis = H.basis();
    for (const IsoClass& M : basis) {
        DimVector dm = H.dim_of(M);
        if (total_dim(dm) == 0) continue;
        for (const IsoClass& N : basis) {
            DimVector dn = H.dim_of(N);
            if (total_dim(dn) == 0 || total_dim(dm) + total_dim(dn) > cfg.degree_bound)
                continue;
            DimVector dr(dm.size());
            for (size_t i = 0; i < dm.size(); ++i) dr[i] = dm[i] + dn[i];
            for (const IsoClass& R : H.classes_of_dim(dr))
                if (H.hall_number(M, N, R) != 0) ++hall_rows;
        }
    }

    RhoReport rho = rho_verify(P, H, 5);

    OrderedJson j;
    j["command"] = "examples";
    j["sample"] = cfg.sample;
    if (cfg.sample == 2) j["chain_length"] = cfg.chain_length;
    j["q"] = cfg.q;
    j["gldim"] = gldim(bq, cfg.q);
    j["roots"] = roots.roots.size();
    j["indecomposables"] = table_summary(table);
    j["generators"] = P.gens.size();
    j["hall_rows"] = hall_rows;
    j["goldens"] = OrderedJson::array();
    for (const GoldenCheck& c : goldens.checks) {
        OrderedJson jc;
        jc["degree"] = c.degree;
        jc["in_slice"] = c.in_slice;
        jc["quotient_dim"] = c.quotient_dim;
        jc["expected_dim"] = c.expected_dim;
        j["goldens"].push_back(std::move(jc));
    }
    j["goldens_ok"] = goldens.ok;
    j["rho"] = rho_json(H, rho);
    j["passed"] = goldens.ok;

    std::vector<std::string> lines;
    lines.push_back("sample " + std::to_string(cfg.sample) + ", q = " + std::to_string(cfg.q));
    lines.push_back("roots: " + std::to_string(roots.roots.size()) +
                    ", indecomposables: " + std::to_string(table.entries.size()) +
                    ", relation generators: " + std::to_string(P.gens.size()));
    lines.push_back("nonzero structure constants up to degree " +
                    std::to_string(cfg.degree_bound) + ": " + std::to_string(hall_rows));
    for (const GoldenCheck& c : goldens.checks)
        lines.push_back("golden at " + dimvec_str(c.degree) + ": " +
                        (c.in_slice ? "in the generated ideal" : "NOT in the generated ideal") +
                        ", quotient dim " + std::to_string(c.quotient_dim) + " vs " +
                        std::to_string(c.expected_dim) + " expected");
    lines.push_back(std::string("golden relations matched: ") + (goldens.ok ? "yes" : "no"));
    rho_text(H, rho, lines);
    lines.push_back(std::string("verdict: ") + (goldens.ok ? "pass" : "fail"));
    emit(cfg, j, lines);

    if (!goldens.ok)
        throw hq_error(errc::golden_mismatch, "sample " + std::to_string(cfg.sample) +
                                                  " does not reproduce its extra relations");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    Config cfg;
    if (const char* env = std::getenv("HALLQ_CACHE_DIR")) cfg.cache_dir = env;

    CLI::App app{"bound-quiver Hall algebra toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_file) {
        if (with_file)
            sub->add_option("file", cfg.file, "quiver description file")->required();
        sub->add_option("--q", cfg.q, "prime order of the coefficient field")
            ->check(CLI::Validator(
                [](std::string& s) -> std::string {
                    int v = std::atoi(s.c_str());
                    return (v >= 2 && v <= 13 && is_prime((uint32_t)v))
                               ? ""
                               : "needs a prime between 2 and 13";
                },
                "PRIME"));
        sub->add_option("--dim-cap", cfg.dim_cap, "total dimension cap for enumerations")
            ->check(CLI::PositiveNumber);
        sub->add_option("--root-cap", cfg.root_cap, "coordinate box for the root search")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cache-dir", cfg.cache_dir,
                        "indecomposable-table cache (default $HALLQ_CACHE_DIR)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "unit form, gldim, roots, consistency");
    add_common(analyze, true);
    CLI::App* roots = app.add_subcommand("roots", "positive roots of the unit form");
    add_common(roots, true);
    CLI::App* indecs =
        app.add_subcommand("indecomposables", "enumerate indecomposable bound representations");
    add_common(indecs, true);
    CLI::App* hall = app.add_subcommand("hall-table", "twisted structure constants");
    add_common(hall, true);
    hall->add_option("--degree-bound", cfg.degree_bound, "total degree bound for emitted rows");
    CLI::App* pres = app.add_subcommand("presentation", "relation generators and graded dims");
    add_common(pres, true);
    pres->add_option("--degree-bound", cfg.degree_bound, "degree bound for the dimension table");
    CLI::App* rho = app.add_subcommand("verify-rho", "map relations into the Hall algebra");
    add_common(rho, true);
    rho->add_option("--degree-bound", cfg.rho_bound, "dimension sweep bound");
    CLI::App* examples = app.add_subcommand("examples", "built-in samples with golden relations");
    add_common(examples, false);
    examples->add_option("sample", cfg.sample, "sample number 1..4")
        ->required()
        ->check(CLI::Range(1, 4));
    examples->add_option("--chain-length", cfg.chain_length, "vertices for sample 2")
        ->check(CLI::Range(3, 8));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(cfg);
        if (app.got_subcommand(roots)) return cmd_roots(cfg);
        if (app.got_subcommand(indecs)) return cmd_indecomposables(cfg);
        if (app.got_subcommand(hall)) return cmd_hall_table(cfg);
        if (app.got_subcommand(pres)) return cmd_presentation(cfg);
        if (app.got_subcommand(rho)) return cmd_verify_rho(cfg);
        if (app.got_subcommand(examples)) return cmd_examples(cfg);
    } catch (const hq_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
