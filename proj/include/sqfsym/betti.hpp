#ifndef SQFSYM_BETTI_HPP
#define SQFSYM_BETTI_HPP

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "homology.hpp"
#include "ideal.hpp"

namespace sqfsym {

/**
 * Graded Betti numbers of S/J.  Entries of J itself are read through
 * ideal(i, j), which applies beta_{i,j}(J) = beta_{i+1,j}(S/J).
 */
class BettiTable
{
    public:
        BettiTable() = default;
        BettiTable(int n, FieldSpec field) : n_(n), field_(field) {}

        int ambient() const { return n_; }
        FieldSpec field() const { return field_; }

        long quotient(int i, int j) const
        {
            auto it = entries_.find({i, j});
            return it == entries_.end() ? 0 : it->second;
        }
        long ideal(int i, int j) const { return quotient(i + 1, j); }

        void add(int i, int j, long value)
        {
            if (value != 0)
                entries_[{i, j}] += value;
        }

        /// Nonzero entries of S/J keyed by (i, j).
        const std::map<std::pair<int, int>, long>& entries() const& { return entries_; }
        std::map<std::pair<int, int>, long> entries() && { return std::move(entries_); }

        /// max{j - i : beta_{i,j}(S/J) != 0}
        int reg_quotient() const
        {
            int r = 0;
            for (const auto& [ij, v] : entries_)
                r = std::max(r, ij.second - ij.first);
            return r;
        }
        int reg_ideal() const { return reg_quotient() + 1; }

        int projective_dimension() const
        {
            int p = 0;
            for (const auto& [ij, v] : entries_)
                p = std::max(p, ij.first);
            return p;
        }

        /// Entrywise merge, used to combine partial scans.
        BettiTable& operator+=(const BettiTable& other)
        {
            for (const auto& [ij, v] : other.entries_)
                entries_[ij] += v;
            return *this;
        }

        bool operator==(const BettiTable& o) const { return n_ == o.n_ && entries_ == o.entries_; }

        /// Macaulay2-style layout: column i, row j - i.
        std::string render() const
        {
            const int cols = projective_dimension() + 1;
            const int rows = reg_quotient() + 1;
            std::ostringstream os;
            os << std::setw(6) << "";
            for (int i = 0; i < cols; ++i)
                os << std::setw(6) << i;
            os << "\n" << std::setw(6) << "total:";
            for (int i = 0; i < cols; ++i)
            {
                long t = 0;
                for (int r = 0; r < rows; ++r)
                    t += quotient(i, i + r);
                os << std::setw(6) << t;
            }
            os << "\n";
            for (int r = 0; r < rows; ++r)
            {
                os << std::setw(5) << r << ":";
                for (int i = 0; i < cols; ++i)
                {
                    const long v = quotient(i, i + r);
                    if (v == 0)
                        os << std::setw(6) << ".";
                    else
                        os << std::setw(6) << v;
                }
                os << "\n";
            }
            return os.str();
        }

    private:
        int n_ = 0;
        FieldSpec field_;
        std::map<std::pair<int, int>, long> entries_;
};

struct BettiOptions
{
    /// Skip subsets containing a variable that occurs in no generator (a cone point).
    bool prune_free_vertices = true;
    /// Hochster scans over more vertices than this are refused.
    int max_scan_vertices = 24;
};

/**
 * Hochster's formula:
 *   beta_{i,j}(S/J) = sum over |W| = j of dim H~_{j-i-1}(Delta(J)|_W).
 */
inline BettiTable betti_table(const SqfIdeal& j, FieldSpec field = {}, BettiOptions options = {})
{
    detail::nonzero_proper(j, "betti_table");
    const SimplicialComplex delta = stanley_reisner(j);
    const VertexSet scan = options.prune_free_vertices ? j.support() : VertexSet::range(j.ambient());
    if (scan.size() > options.max_scan_vertices)
        throw CapabilityError("Hochster scan over " + std::to_string(scan.size()) + " vertices exceeds the limit of " +
                              std::to_string(options.max_scan_vertices));
    BettiTable table(j.ambient(), field);
    for (int size = 0; size <= scan.size(); ++size)
    {
        for_each_subset_of_size(scan, size, [&](VertexSet w) {
            const std::vector<long> dims = reduced_betti(delta, w, field);
            for (int d = -1; d < size; ++d)
                table.add(size - d - 1, size, dims[d + 1]);
        });
    }
    return table;
}

/// reg(J) = reg(S/J) + 1.
inline int regularity(const SqfIdeal& j, FieldSpec field = {})
{
    return betti_table(j, field).reg_ideal();
}

}   // namespace sqfsym

#endif
