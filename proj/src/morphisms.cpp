#include "ga/morphisms.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace ga {

bool is_independent(const std::vector<Multivector<Rational>>& vectors) {
    if (vectors.empty()) return true;
    for (const auto& v : vectors)
        if (!v.is_pure_grade(1))
            throw Error("is_independent requires grade-1 multivectors");
    Multivector<Rational> wedge = Multivector<Rational>::unit(vectors[0].signature_ptr());
    for (const auto& v : vectors) wedge = outer_product(wedge, v);
    return !wedge.is_zero();
}

Matrix<Rational> load_gram_matrix(std::istream& in) {
    std::size_t n = 0;
    if (!(in >> n)) throw Error("gram matrix: missing dimension line");
    if (n == 0 || n > 64) throw Error("gram matrix: dimension out of range");
    Matrix<Rational> g(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            std::string token;
            if (!(in >> token))
                throw Error("gram matrix: expected " + std::to_string(n * n) +
                            " entries");
            g.at(r, c) = parse_rational_literal(token);
        }
    }
    if (!g.is_symmetric()) throw Error("gram matrix is not symmetric");
    return g;
}

Matrix<Rational> load_gram_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return load_gram_matrix(in);
}

} // namespace ga
