#include "hallq/gallery.hpp"

#include <sstream>

namespace hallq {

namespace {

std::string chain_text(int n)
{
    std::ostringstream os;
    for (int v = 1; v <= n; ++v) os << "vertex " << v << "\n";
    for (int v = 1; v < n; ++v) os << "arrow a" << v << " " << v << " " << v + 1 << "\n";
    os << "relation 1*";
    for (int v = 1; v < n; ++v) os << (v > 1 ? "," : "") << "a" << v;
    os << "\n";
    return os.str();
}

const char* square_text(bool both_zero)
{
    return both_zero ? "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
                       "arrow a1 1 2\narrow a2 2 4\narrow b1 1 3\narrow b2 3 4\n"
                       "relation 1*a1,a2\nrelation 1*b1,b2\n"
                     : "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
                       "arrow a1 1 2\narrow a2 2 4\narrow b1 1 3\narrow b2 3 4\n"
                       "relation 1*a1,a2 + -1*b1,b2\n";
}

// nested [e_first, [e_{first+1}, ..., [e_{last-1}, e_last]_t ...]_t] with a
// plain outermost commutator
NCElement nested_chain_golden(int n)
{
    NCElement inner = twisted_commutator(NCElement::generator(n, n - 2),
                                         NCElement::generator(n, n - 1), 1);
    for (int k = n - 3; k >= 1; --k)
        inner = twisted_commutator(NCElement::generator(n, k), inner, 1);
    return twisted_commutator(NCElement::generator(n, 0), inner, 0);
}

} // namespace

GalleryExample gallery_example(int n, int chain_length)
{
    GalleryExample ex;
    ex.number = n;
    switch (n) {
    case 1: {
        ex.quiver = parse_quiver(chain_text(3));
        NCElement e1 = NCElement::generator(3, 0), e3 = NCElement::generator(3, 2);
        ex.goldens.push_back(twisted_commutator(e3, e1, 1));
        ex.goldens.push_back(nested_chain_golden(3));
        break;
    }
    case 2: {
        if (chain_length < 3)
            throw hq_error(errc::parse_error, "chain sample needs at least three vertices");
        ex.chain_length = chain_length;
        ex.quiver = parse_quiver(chain_text(chain_length));
        NCElement e1 = NCElement::generator(chain_length, 0);
        NCElement en = NCElement::generator(chain_length, chain_length - 1);
        ex.goldens.push_back(twisted_commutator(en, e1, 1));
        ex.goldens.push_back(nested_chain_golden(chain_length));
        break;
    }
    case 3: {
        ex.quiver = parse_quiver(square_text(false));
        NCElement e1 = NCElement::generator(4, 0), e2 = NCElement::generator(4, 1),
                  e3 = NCElement::generator(4, 2), e4 = NCElement::generator(4, 3);
        ex.goldens.push_back(twisted_commutator(e4, e1, 1));
        ex.goldens.push_back(twisted_commutator(e1, twisted_commutator(e2, e4, 1), 0));
        ex.goldens.push_back(twisted_commutator(e1, twisted_commutator(e3, e4, 1), 0));
        break;
    }
    case 4: {
        ex.quiver = parse_quiver(square_text(true));
        NCElement e1 = NCElement::generator(4, 0), e2 = NCElement::generator(4, 1),
                  e3 = NCElement::generator(4, 2), e4 = NCElement::generator(4, 3);
        ex.goldens.push_back(twisted_commutator(e1, twisted_commutator(e2, e4, 1), -1));
        ex.goldens.push_back(twisted_commutator(e1, twisted_commutator(e3, e4, 1), -1));
        ex.goldens.push_back(twisted_commutator(e4, e1, 2));
        ex.goldens.push_back(twisted_commutator(
            e1, twisted_commutator(e2, twisted_commutator(e3, e4, 1), 1), 0));
        break;
    }
    default:
        throw hq_error(errc::parse_error, "gallery samples are numbered 1..4");
    }
    return ex;
}

GoldenReport match_goldens(const GalleryExample& ex, const Presentation& P)
{
    GoldenReport report;
    for (const NCElement& g : ex.goldens) {
        GoldenCheck check;
        check.degree = g.degree();
        check.in_slice = in_ideal_slice(P, g);
        check.quotient_dim = graded_dimension(P, check.degree);
        check.expected_dim = root_multiset_count(P.roots, check.degree);
        check.dim_match = check.quotient_dim == check.expected_dim;
        if (!check.in_slice || !check.dim_match) report.ok = false;
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace hallq
