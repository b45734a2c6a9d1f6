#include "coxring/abgroup.hpp"

#include <cctype>
#include <stdexcept>

namespace coxring {

GroupInvariants cokernel_invariants(const IntMatrix& relations) {
    GroupInvariants g;
    if (relations.rows() == 0) {
        g.free_rank = relations.cols();
        return g;
    }
    const SmithDecomposition snf = smith_normal_form(relations);
    std::size_t rank = 0;
    for (const Integer& d : snf.diagonal()) {
        if (d == 0) {
            continue;
        }
        ++rank;
        if (d != 1) {
            g.torsion.push_back(d);
        }
    }
    g.free_rank = relations.cols() - rank;
    return g;
}

namespace {

std::vector<std::string> numbered_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("g" + std::to_string(i));
    }
    return names;
}

}  // namespace

PresentedAbelianGroup::PresentedAbelianGroup(std::vector<std::string> generators, std::vector<IntVector> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
    for (const IntVector& r : relations_) {
        if (r.size() != generators_.size()) {
            throw std::invalid_argument("relation of length " + std::to_string(r.size()) + " for " +
                                        std::to_string(generators_.size()) + " generators");
        }
    }
    invariants_ = cokernel_invariants(relation_matrix());
}

PresentedAbelianGroup::PresentedAbelianGroup(std::size_t generator_count, std::vector<IntVector> relations)
    : PresentedAbelianGroup(numbered_names(generator_count), std::move(relations)) {}

IntMatrix PresentedAbelianGroup::relation_matrix() const {
    IntMatrix m(relations_.size(), generators_.size());
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        for (std::size_t j = 0; j < generators_.size(); ++j) {
            m(i, j) = Integer(static_cast<long>(relations_[i][j]));
        }
    }
    return m;
}

PresentedAbelianGroup PresentedAbelianGroup::quotient(const std::vector<IntVector>& classes) const {
    std::vector<IntVector> rels = relations_;
    for (const IntVector& c : classes) {
        if (c.size() != generators_.size()) {
            throw std::invalid_argument("class vector of length " + std::to_string(c.size()) + " for " +
                                        std::to_string(generators_.size()) + " generators");
        }
        rels.push_back(c);
    }
    return PresentedAbelianGroup(generators_, std::move(rels));
}

WeilDivisor::WeilDivisor(std::map<std::string, long long> coefficients) {
    for (auto& [name, c] : coefficients) {
        if (c != 0) {
            coefficients_.emplace(name, c);
        }
    }
}

WeilDivisor WeilDivisor::parse(const std::string& text) {
    std::map<std::string, long long> coeffs;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size()) {
            if (first) {
                throw std::invalid_argument("empty divisor");
            }
            break;
        }
        long long sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(pos));
        }
        first = false;
        long long mult = 1;
        bool has_number = false;
        const std::size_t num_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            has_number = true;
        }
        if (has_number) {
            mult = std::stoll(text.substr(num_start, pos - num_start));
        }
        skip();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip();
        }
        const std::size_t name_start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        const std::string name = text.substr(name_start, pos - name_start);
        if (name.empty()) {
            if (has_number && mult == 0) {
                continue;
            }
            throw std::invalid_argument("expected a prime divisor name at position " + std::to_string(name_start));
        }
        if (std::isdigit(static_cast<unsigned char>(name[0]))) {
            throw std::invalid_argument("divisor names cannot start with a digit");
        }
        coeffs[name] += sign * mult;
    }
    return WeilDivisor(std::move(coeffs));
}

long long WeilDivisor::coefficient(const std::string& name) const {
    auto it = coefficients_.find(name);
    return it == coefficients_.end() ? 0 : it->second;
}

WeilDivisor WeilDivisor::operator+(const WeilDivisor& other) const {
    std::map<std::string, long long> sum = coefficients_;
    for (const auto& [name, c] : other.coefficients_) {
        sum[name] += c;
    }
    return WeilDivisor(std::move(sum));
}

IntVector class_of(const WeilDivisor& d, const std::vector<std::string>& basis) {
    IntVector v(basis.size(), 0);
    for (const auto& [name, c] : d.coefficients()) {
        std::size_t i = 0;
        while (i < basis.size() && basis[i] != name) {
            ++i;
        }
        if (i == basis.size()) {
            throw std::invalid_argument("unknown prime divisor '" + name + "'");
        }
        v[i] = c;
    }
    return v;
}

}  // namespace coxring
