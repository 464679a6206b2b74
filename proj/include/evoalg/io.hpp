#ifndef EVOALG_IO_HPP
#define EVOALG_IO_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "field.hpp"
#include "pattern.hpp"

namespace evoalg {

namespace detail {

inline std::vector<std::string> read_content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(a, b - a + 1));
    }
    return lines;
}

} // namespace detail

/// Matrix file: header "dim <n> field <Q|F<p>>" then n rows of n scalars;
/// row k lists the coefficients of the k-th basis vector across the squares.
struct MatrixFile {
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> entries;  // row-major scalar texts

    static MatrixFile parse(std::istream& in) {
        auto lines = detail::read_content_lines(in);
        if (lines.empty()) throw std::invalid_argument("matrix file: empty");
        std::istringstream head(lines[0]);
        std::string kw1, kw2, fieldtext;
        int n = 0;
        head >> kw1 >> n >> kw2 >> fieldtext;
        if (kw1 != "dim" || kw2 != "field" || n < 1)
            throw std::invalid_argument("matrix file: bad header '" + lines[0] + "'");
        MatrixFile mf;
        mf.field = FieldSpec::parse(fieldtext);
        mf.dim = n;
        if (static_cast<int>(lines.size()) != n + 1)
            throw std::invalid_argument("matrix file: expected " + std::to_string(n) + " rows");
        for (int r = 0; r < n; ++r) {
            std::istringstream row(lines[r + 1]);
            std::string tok;
            int c = 0;
            while (row >> tok) { mf.entries.push_back(tok); ++c; }
            if (c != n) throw std::invalid_argument("matrix file: row " + std::to_string(r + 1) +
                                                    " has " + std::to_string(c) + " entries");
        }
        return mf;
    }

    static MatrixFile load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        return parse(in);
    }

    template <class F>
    EvolutionAlgebra<F> instantiate(const F& field) const {
        EvolutionAlgebra<F> a(field, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                a.at(r, c) = parse_scalar(entries[r * dim + c], field);
        return a;
    }
};

/// Pattern file: "dim <n>", n rows over {0, *}, then optional
/// "pin <row> <col> <value>" lines for normalized entries (1-based indices).
struct PatternFile {
    SupportPattern pattern;
    std::map<std::pair<int, int>, std::string> pins;  // 1-based (row, col) -> scalar text

    static PatternFile parse(std::istream& in) {
        auto lines = detail::read_content_lines(in);
        if (lines.empty()) throw std::invalid_argument("pattern file: empty");
        std::istringstream head(lines[0]);
        std::string kw;
        int n = 0;
        head >> kw >> n;
        if (kw != "dim" || n < 1 || n > 8)
            throw std::invalid_argument("pattern file: bad header '" + lines[0] + "'");
        if (static_cast<int>(lines.size()) < n + 1)
            throw std::invalid_argument("pattern file: missing rows");
        PatternFile pf;
        pf.pattern = SupportPattern(n);
        for (int r = 0; r < n; ++r) {
            const std::string& row = lines[r + 1];
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("pattern file: row " + std::to_string(r + 1) + " wrong length");
            for (int c = 0; c < n; ++c) {
                if (row[c] == '*') pf.pattern.set(r, c, true);
                else if (row[c] != '0')
                    throw std::invalid_argument("pattern file: bad cell in row " + std::to_string(r + 1));
            }
        }
        for (std::size_t k = n + 1; k < lines.size(); ++k) {
            std::istringstream pin(lines[k]);
            std::string kw2, value;
            int r = 0, c = 0;
            pin >> kw2 >> r >> c >> value;
            if (kw2 != "pin" || r < 1 || r > n || c < 1 || c > n || value.empty())
                throw std::invalid_argument("pattern file: bad pin line '" + lines[k] + "'");
            if (!pf.pattern.get(r - 1, c - 1))
                throw std::invalid_argument("pattern file: pin targets a zero cell");
            pf.pins[{r, c}] = value;
        }
        return pf;
    }

    static PatternFile load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        return parse(in);
    }

    /// Deterministic generic instance: pinned cells take their pinned value,
    /// the free cells take distinct primes in row-major order.
    template <class F>
    EvolutionAlgebra<F> instantiate_distinct_primes(const F& field) const {
        static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                     59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113,
                                     127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
                                     191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
                                     257, 263, 269, 271, 277, 281, 283, 293, 307, 311};
        const int n = pattern.dim();
        EvolutionAlgebra<F> a(field, n);
        int next = 0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (!pattern.get(r, c)) continue;
                auto it = pins.find({r + 1, c + 1});
                if (it != pins.end()) a.at(r, c) = parse_scalar(it->second, field);
                else a.at(r, c) = field.from_int(primes[next++ % 64]);
            }
        return a;
    }
};

inline std::string pattern_file_str(const SupportPattern& p) {
    std::string s = "dim " + std::to_string(p.dim()) + "\n";
    s += p.str();
    return s;
}

} // namespace evoalg

#endif
