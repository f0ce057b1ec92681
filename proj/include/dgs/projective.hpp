#ifndef DGS_PROJECTIVE_HPP
#define DGS_PROJECTIVE_HPP

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgs/digraph.hpp"
#include "dgs/fields.hpp"

namespace dgs {

// d x d invertible matrix over a finite field, stored in canonical
// projective form: scaled so the first nonzero entry in row-major order
// equals 1. Scalar multiples therefore collapse to one representative.
struct ProjMatrix {
    int d = 0;
    std::vector<FieldElem> entries;  // row-major, d*d

    const FieldElem& at(int i, int j) const { return entries[static_cast<std::size_t>(i * d + j)]; }
    FieldElem& at(int i, int j) { return entries[static_cast<std::size_t>(i * d + j)]; }

    bool operator==(const ProjMatrix& other) const = default;
};

inline FieldElem mat_determinant(const Field& field, const ProjMatrix& m) {
    // Gaussian elimination over the field
    ProjMatrix a = m;
    const int d = a.d;
    FieldElem det = field.one();
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row)
            if (!a.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return field.zero();
        if (pivot != col) {
            for (int j = 0; j < d; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = field.neg(det);
        }
        det = field.mul(det, a.at(col, col));
        const FieldElem inv = field.inverse(a.at(col, col));
        for (int row = col + 1; row < d; ++row) {
            if (a.at(row, col).is_zero()) continue;
            const FieldElem factor = field.mul(a.at(row, col), inv);
            for (int j = col; j < d; ++j)
                a.at(row, j) = field.sub(a.at(row, j), field.mul(factor, a.at(col, j)));
        }
    }
    return det;
}

inline ProjMatrix mat_multiply(const Field& field, const ProjMatrix& a, const ProjMatrix& b) {
    const int d = a.d;
    ProjMatrix c{d, std::vector<FieldElem>(static_cast<std::size_t>(d * d), field.zero())};
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < d; ++j)
                c.at(i, j) = field.add(c.at(i, j), field.mul(a.at(i, k), b.at(k, j)));
        }
    return c;
}

// Rescale so the first nonzero row-major entry is 1. Idempotent.
inline ProjMatrix proj_canonical(const Field& field, ProjMatrix m) {
    if (mat_determinant(field, m).is_zero()) throw SingularMatrixError("projective matrix must be invertible");
    for (const FieldElem& x : m.entries) {
        if (x.is_zero()) continue;
        const FieldElem inv = field.inverse(x);
        for (FieldElem& y : m.entries) y = field.mul(y, inv);
        return m;
    }
    throw SingularMatrixError("zero matrix");
}

inline ProjMatrix proj_identity(const Field& field, int d) {
    ProjMatrix m{d, std::vector<FieldElem>(static_cast<std::size_t>(d * d), field.zero())};
    for (int i = 0; i < d; ++i) m.at(i, i) = field.one();
    return m;
}

namespace detail {

inline std::string proj_key(const ProjMatrix& m) {
    std::string key;
    key.reserve(m.entries.size() * 4);
    for (const FieldElem& x : m.entries)
        for (auto c : x.coeffs) {
            key += std::to_string(c);
            key += ',';
        }
    return key;
}

}  // namespace detail

struct CayleyResult {
    Digraph digraph;
    std::vector<ProjMatrix> vertex_labels;  // index -> group element
};

// Group closure of the generators under right multiplication, as a digraph
// g -> g*s. BFS from the identity with canonical-form hashing; |S|-regular
// counting multiplicity.
inline CayleyResult cayley_digraph(const Field& field, int d, const std::vector<ProjMatrix>& generators,
                                   std::size_t closure_cap = 1'000'000) {
    if (generators.empty()) throw ParseError("generator set is empty");
    std::vector<ProjMatrix> gens;
    gens.reserve(generators.size());
    for (const ProjMatrix& g : generators) {
        if (g.d != d) throw ParseError("generator dimension mismatch");
        gens.push_back(proj_canonical(field, g));
    }

    std::vector<ProjMatrix> elements;
    std::unordered_map<std::string, int> index;
    std::vector<Edge> edges;

    const ProjMatrix id = proj_identity(field, d);
    elements.push_back(id);
    index.emplace(detail::proj_key(id), 0);

    for (std::size_t head = 0; head < elements.size(); ++head) {
        const ProjMatrix g = elements[head];
        for (const ProjMatrix& s : gens) {
            ProjMatrix h = proj_canonical(field, mat_multiply(field, g, s));
            const std::string key = detail::proj_key(h);
            auto [it, inserted] = index.emplace(key, static_cast<int>(elements.size()));
            if (inserted) {
                elements.push_back(std::move(h));
                if (elements.size() > closure_cap)
                    throw ClosureBudgetError("group closure exceeded cap of " + std::to_string(closure_cap));
            }
            edges.push_back({static_cast<int>(head), it->second, 1});
        }
    }

    Digraph dg(static_cast<int>(elements.size()), std::move(edges));
    return CayleyResult{std::move(dg), std::move(elements)};
}

// --- generator file format ---------------------------------------------------
//
//   field p=<p> e=<e> mod=<coeffs>
//   <entry> <entry> ... (d*d row-major entries, one matrix per line)
//
// Prime-field entries are decimal integers; extension entries are coefficient
// tuples like [1,1] meaning 1+x. mod= uses the same tuple syntax.

inline std::vector<std::int64_t> parse_coeff_tuple(std::string_view s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected [c0,c1,...] tuple");
    std::vector<std::int64_t> coeffs;
    std::string body(s.substr(1, s.size() - 2));
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ','))
        coeffs.push_back(detail::parse_int_strict(tok));
    if (coeffs.empty()) throw ParseError("empty coefficient tuple");
    return coeffs;
}

struct GeneratorFile {
    FieldSpec field;
    int d = 0;
    std::vector<ProjMatrix> generators;
};

inline GeneratorFile read_generator_file(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty generator file");
    auto fields = detail::split_fields(line);
    if (fields.size() != 4 || fields[0] != "field" || !fields[1].starts_with("p=") || !fields[2].starts_with("e=") ||
        !fields[3].starts_with("mod="))
        throw ParseError("header must be 'field p=<p> e=<e> mod=<coeffs>'");
    GeneratorFile gf;
    gf.field.p = detail::parse_int_strict(fields[1].substr(2));
    gf.field.e = static_cast<int>(detail::parse_int_strict(fields[2].substr(2)));
    gf.field.modulus = parse_coeff_tuple(fields[3].substr(4));
    gf.field.validate();

    Field field(gf.field);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto toks = detail::split_fields(line);
        std::vector<FieldElem> entries;
        entries.reserve(toks.size());
        for (auto t : toks) {
            if (gf.field.e == 1)
                entries.push_back(field.from_int(detail::parse_int_strict(t)));
            else
                entries.push_back(field.from_coeffs(parse_coeff_tuple(t)));
        }
        int d = 0;
        while (d * d < static_cast<int>(entries.size())) ++d;
        if (d * d != static_cast<int>(entries.size())) throw ParseError("matrix line is not a perfect square of entries");
        if (gf.d == 0)
            gf.d = d;
        else if (gf.d != d)
            throw ParseError("inconsistent matrix dimensions");
        gf.generators.push_back(ProjMatrix{d, std::move(entries)});
    }
    if (gf.generators.empty()) throw ParseError("no generator matrices");
    return gf;
}

inline void write_generator_file(std::ostream& os, const FieldSpec& spec, const std::vector<ProjMatrix>& gens) {
    Field field(spec);
    os << "field p=" << spec.p << " e=" << spec.e << " mod=[";
    for (std::size_t i = 0; i < spec.modulus.size(); ++i) {
        if (i) os << ",";
        os << spec.modulus[i];
    }
    os << "]\n";
    for (const ProjMatrix& g : gens) {
        for (int i = 0; i < g.d * g.d; ++i) {
            if (i) os << " ";
            os << field.format(g.entries[static_cast<std::size_t>(i)]);
        }
        os << "\n";
    }
}

}  // namespace dgs

#endif
