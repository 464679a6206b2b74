#ifndef EVOALG_PERM_HPP
#define EVOALG_PERM_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace evoalg {

/// Permutation of {0..n-1}, stored as the image table: p[i] = image of i.
///
/// Cycle notation in text I/O is 1-based, e.g. "(1,2)(3,4)".
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Perm: images are not a bijection");
            seen[v] = true;
        }
    }

    static Perm identity(int n) { return Perm(n); }

    /// Parse 1-based cycle notation: "(1,2)", "(1,2)(3,4)", "(1,2,4,3)". "id" or "" is the identity.
    static Perm from_cycles(const std::string& text, int n) {
        Perm p(n);
        std::size_t i = 0;
        auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
        skip_ws();
        if (i >= text.size() || text.compare(i, 2, "id") == 0) return p;
        while (i < text.size()) {
            skip_ws();
            if (i >= text.size()) break;
            if (text[i] != '(') throw std::invalid_argument("Perm: expected '(' in " + text);
            ++i;
            std::vector<int> cyc;
            while (true) {
                skip_ws();
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw std::invalid_argument("Perm: expected index in " + text);
                int v = std::stoi(text.substr(i, j - i)) - 1;
                if (v < 0 || v >= n) throw std::invalid_argument("Perm: index out of range in " + text);
                cyc.push_back(v);
                i = j;
                skip_ws();
                if (i < text.size() && text[i] == ',') { ++i; continue; }
                if (i < text.size() && text[i] == ')') { ++i; break; }
                throw std::invalid_argument("Perm: expected ',' or ')' in " + text);
            }
            for (std::size_t k = 0; k < cyc.size(); ++k)
                p.img_[cyc[k]] = cyc[(k + 1) % cyc.size()];
        }
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
        return Perm(std::move(inv));
    }

    /// Composition (a * b)(i) = a(b(i)).
    friend Perm operator*(const Perm& a, const Perm& b) {
        std::vector<int> c(a.img_.size());
        for (int i = 0; i < a.size(); ++i) c[i] = a.img_[b.img_[i]];
        return Perm(std::move(c));
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    /// 1-based cycle notation; fixed points omitted; identity prints as "id".
    std::string cycles() const {
        std::string out;
        std::vector<bool> seen(img_.size(), false);
        for (int i = 0; i < size(); ++i) {
            if (seen[i] || img_[i] == i) continue;
            out += '(';
            int j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out += ',';
                out += std::to_string(j + 1);
                first = false;
                j = img_[j];
            }
            out += ')';
        }
        return out.empty() ? "id" : out;
    }

private:
    std::vector<int> img_;
};

/// A subgroup of S_n as an explicit element list, closed under composition and inverse.
class PermGroup {
public:
    explicit PermGroup(int n) : n_(n), elems_{Perm::identity(n)} {}

    static PermGroup symmetric(int n) {
        PermGroup g(n);
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        g.elems_.clear();
        do {
            g.elems_.emplace_back(img);
        } while (std::next_permutation(img.begin(), img.end()));
        std::sort(g.elems_.begin(), g.elems_.end());
        return g;
    }

    /// Closure of a generator list.
    static PermGroup generated(int n, const std::vector<Perm>& gens) {
        PermGroup g(n);
        std::vector<Perm> work = {Perm::identity(n)};
        for (std::size_t i = 0; i < work.size(); ++i) {
            for (const Perm& s : gens) {
                for (const Perm& t : {work[i] * s, s * work[i]}) {
                    if (std::find(work.begin(), work.end(), t) == work.end())
                        work.push_back(t);
                }
            }
        }
        std::sort(work.begin(), work.end());
        g.elems_ = std::move(work);
        return g;
    }

    /// Parse comma-separated generator cycles, e.g. "(1,2),(3,4)". Empty text gives the trivial group.
    static PermGroup from_generators(const std::string& text, int n) {
        std::vector<Perm> gens;
        std::size_t i = 0;
        while (i < text.size()) {
            std::size_t j = text.find(')', i);
            if (j == std::string::npos) break;
            gens.push_back(Perm::from_cycles(text.substr(i, j - i + 1), n));
            i = text.find('(', j);
            if (i == std::string::npos) break;
        }
        return generated(n, gens);
    }

    int degree() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<Perm>& elements() const { return elems_; }
    bool contains(const Perm& p) const {
        return std::binary_search(elems_.begin(), elems_.end(), p);
    }

private:
    int n_;
    std::vector<Perm> elems_;
};

} // namespace evoalg

#endif
