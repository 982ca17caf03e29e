#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pbec/errors.hpp"
#include "pbec/linear_code.hpp"

namespace pbec {

Field field_of_order(std::uint32_t q)
{
    if (q < 2) throw ParameterError("field order must be at least 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw ParameterError("field order " + std::to_string(q) + " is not a prime power");
    return FieldSpec::make(p, e);
}

void write_code(std::ostream& os, const LinearCode& c, std::optional<std::pair<std::size_t, std::size_t>> shape)
{
    os << c.field()->order() << ' ' << c.n() << ' ' << c.k() << '\n';
    if (shape) os << "shape " << shape->first << ' ' << shape->second << '\n';
    for (std::size_t r = 0; r < c.k(); ++r) {
        const auto row = c.generator().row(r);
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << '\n';
    }
}

CodeFile read_code(std::istream& is)
{
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#') return true;
        }
        return false;
    };
    if (!next_line()) throw ParameterError("code file: missing header");
    std::uint32_t q = 0;
    std::size_t n = 0, k = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> q >> n >> k)) throw ParameterError("code file: header must be `q n k`");
    }
    Field f = field_of_order(q);
    std::optional<std::pair<std::size_t, std::size_t>> shape;
    std::vector<std::vector<Elem>> rows;
    while (rows.size() < k) {
        if (!next_line()) throw ParameterError("code file: fewer generator rows than k");
        std::istringstream ls(line);
        if (line.find("shape") != std::string::npos) {
            std::string tag;
            std::size_t sn = 0, sm = 0;
            if (!(ls >> tag >> sn >> sm) || tag != "shape" || sn * sm != n) {
                throw ParameterError("code file: shape line must be `shape n m` with n*m equal to the length");
            }
            shape = {sn, sm};
            continue;
        }
        std::vector<Elem> row;
        long long x = 0;
        while (ls >> x) {
            if (x < 0 || x >= static_cast<long long>(q)) throw ParameterError("code file: entry outside the field");
            row.push_back(static_cast<Elem>(x));
        }
        if (!ls.eof()) throw ParameterError("code file: malformed row");
        if (row.size() != n) throw ParameterError("code file: row length differs from n");
        rows.push_back(std::move(row));
    }
    if (k == 0) {
        // an optional shape line may still follow
        if (next_line()) {
            std::istringstream ls(line);
            std::string tag;
            std::size_t sn = 0, sm = 0;
            if ((ls >> tag >> sn >> sm) && tag == "shape" && sn * sm == n) shape = {sn, sm};
        }
    }
    LinearCode c = LinearCode::from_generators(f, n, rows);
    if (c.k() != k) throw ParameterError("code file: generator rows are linearly dependent");
    return {std::move(c), shape};
}

} // namespace pbec
