#include "shioda/pencil.hpp"

#include <json.hpp>

#include <istream>
#include <sstream>
#include <stdexcept>

namespace shioda {

namespace {

std::vector<Int> prime_divisors(Int x) {
    std::vector<Int> primes;
    if (x < 0) x = -x;
    for (Int p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            primes.push_back(p);
            while (x % p == 0) x = divexact(x, p);
        }
    }
    if (x > 1) primes.push_back(x);
    return primes;
}

}  // namespace

CYPencil validate(const IntMatrix& a, bool require_balanced) {
    if (!a.is_square()) throw std::invalid_argument("validate: matrix is not square");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j) < 0) throw std::invalid_argument("validate: negative entry");

    Int e = vec_sum(a.row(0));
    for (std::size_t i = 1; i < n; ++i)
        if (vec_sum(a.row(i)) != e) throw std::invalid_argument("validate: non-constant row sums");

    bool col_balanced = true;
    for (std::size_t j = 0; j < n; ++j)
        if (vec_sum(a.col(j)) != Int(n)) col_balanced = false;
    if (require_balanced && !col_balanced)
        throw std::invalid_argument("validate: column sums not all equal to n");
    if (col_balanced && e != Int(n))
        throw std::logic_error("validate: column-balanced matrix with e != n (internal bug)");

    Int det_a = det(a);
    if (det_a == 0) throw std::invalid_argument("validate: singular matrix");

    IntMatrix adj = adjugate(a);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g = gcd(g, adj.at(i, j));
    Int d = divexact(abs(det_a), gcd(abs(det_a), g));
    Int scale = divexact(det_a, d);  // signed, so a*b = d*I with d > 0

    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b.at(i, j) = divexact(adj.at(i, j), scale);

    // minimality: a*b = b*a = d*I, and b/p is non-integral for every prime p | d
    if (a * b != IntMatrix::identity(n).scaled(d) || b * a != IntMatrix::identity(n).scaled(d))
        throw std::logic_error("validate: a*b != d*I (internal bug)");
    for (const Int& p : prime_divisors(d)) {
        bool divisible = true;
        for (std::size_t i = 0; i < n && divisible; ++i)
            for (std::size_t j = 0; j < n && divisible; ++j)
                if (b.at(i, j) % p != 0) divisible = false;
        if (divisible) throw std::logic_error("validate: d is not minimal (internal bug)");
    }

    Int m = vec_sum(b.row(0));
    for (std::size_t i = 1; i < n; ++i)
        if (vec_sum(b.row(i)) != m) throw std::logic_error("validate: B row sums not constant (internal bug)");
    if (d != m * e) throw std::logic_error("validate: d != m*e (internal bug)");
    if (col_balanced)
        for (std::size_t j = 0; j < n; ++j)
            if (vec_sum(b.col(j)) != m)
                throw std::logic_error("validate: B column sums not constant (internal bug)");

    return CYPencil{a, n, e, col_balanced, det_a, d, m, b};
}

IntMatrix builtin_family(int index) {
    switch (index) {
        case 1:
            return IntMatrix::identity(5).scaled(5);
        case 2:
            return IntMatrix::from_rows({{4, 1, 0, 0, 0},
                                         {0, 4, 1, 0, 0},
                                         {0, 0, 4, 1, 0},
                                         {0, 0, 0, 4, 1},
                                         {1, 0, 0, 0, 4}});
        case 3:
            return IntMatrix::from_rows({{4, 1, 0, 0, 0},
                                         {0, 4, 1, 0, 0},
                                         {0, 0, 4, 1, 0},
                                         {1, 0, 0, 4, 0},
                                         {0, 0, 0, 0, 5}});
        case 4:
            return IntMatrix::from_rows({{4, 1, 0, 0, 0},
                                         {0, 4, 1, 0, 0},
                                         {1, 0, 4, 0, 0},
                                         {0, 0, 0, 5, 0},
                                         {0, 0, 0, 0, 5}});
        case 5:
            return IntMatrix::from_rows({{4, 1, 0, 0, 0},
                                         {0, 4, 1, 0, 0},
                                         {1, 0, 4, 0, 0},
                                         {0, 0, 0, 4, 1},
                                         {0, 0, 0, 1, 4}});
        case 6:
            return IntMatrix::from_rows({{4, 1, 0, 0, 0},
                                         {1, 4, 0, 0, 0},
                                         {0, 0, 5, 0, 0},
                                         {0, 0, 0, 5, 0},
                                         {0, 0, 0, 0, 5}});
        default:
            throw std::invalid_argument("builtin_family: index must be in 1..6");
    }
}

IntMatrix cyclic_family(std::size_t n) {
    if (n < 2) throw std::invalid_argument("cyclic_family: n must be at least 2");
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a.at(i, i) = Int(static_cast<long>(n) - 1);
        a.at(i, (i + 1) % n) = 1;
    }
    return a;
}

Int cyclic_det_closed_form(std::size_t n) {
    Int base(static_cast<long>(n) - 1);
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    return p - (n % 2 == 0 ? Int(1) : Int(-1));
}

IntVec cyclic_b_first_row(std::size_t n) {
    IntVec q(n);
    Int base(static_cast<long>(n) - 1);
    for (std::size_t i = 1; i <= n; ++i) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - i));
        q[i - 1] = (i % 2 == 1) ? p : -p;
    }
    return q;
}

IntMatrix parse_matrix_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("matrix document: malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
        throw std::invalid_argument("matrix document: expected fields n and rows");
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() <= 0)
        throw std::invalid_argument("matrix document: n must be a positive integer");
    const auto n = static_cast<std::size_t>(doc["n"].get<long>());
    const auto& rows = doc["rows"];
    if (!rows.is_array() || rows.size() != n)
        throw std::invalid_argument("matrix document: rows must be an array of n rows");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw std::invalid_argument("matrix document: each row must have n entries");
        for (std::size_t j = 0; j < n; ++j) {
            const auto& cell = rows[i][j];
            if (!cell.is_number_integer())
                throw std::invalid_argument("matrix document: entries must be integers");
            long v = cell.get<long>();
            if (v < 0) throw std::invalid_argument("matrix document: negative entry");
            m.at(i, j) = Int(v);
        }
    }
    return m;
}

IntMatrix read_matrix_document(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_document(buf.str());
}

}  // namespace shioda
