#pragma once

#include "feyngraph/graph.hpp"
#include "feyngraph/graph_vector.hpp"
#include "feyngraph/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace feyngraph {

// Word in the cobar construction: ordered letters, each a nonempty
// canonical graph. Cobar degree of a letter is edges - 1.
using CobarWord = std::vector<DirectedGraph>;

int cobar_degree(const CobarWord& w);

class CobarVector {
public:
    CobarVector() = default;
    static CobarVector of(const CobarWord& w, const Rational& coeff = 1);
    void add(const CobarWord& w, const Rational& coeff);
    const std::map<CobarWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CobarVector& operator+=(const CobarVector& o);
    CobarVector& operator-=(const CobarVector& o);
    bool operator==(const CobarVector& o) const { return terms_ == o.terms_; }

private:
    std::map<CobarWord, Rational> terms_;
};

// Total differential D = D_d + D_coproduct. Extended as a graded
// derivation with Koszul prefix signs in the shifted degree (edges - 1);
// on a single letter the coalgebra part carries the suspension sign
// (-1)^{edges(sub) - 1} per split, which is what D^2 = 0 requires.
CobarVector cobar_differential(const CobarVector& v, const ClassPredicate& c);

// Rational functional on cobar words, finitely supported.
using DualCochain = std::map<CobarWord, Rational>;

Rational pair_cochain(const DualCochain& phi, const CobarVector& v);

// Multiplicative weight functional: values stored on connected canonical
// generators, value on a disconnected graph is the signed product over
// components, value on the empty graph is 1, absent generators are 0.
class WeightFunctional {
public:
    void set(const DirectedGraph& g, const Rational& value);
    Rational eval(const DirectedGraph& g) const;
    Rational eval(const GraphVector& v) const;
    // sum of coeff * prod eval(letter)
    Rational eval_word_product(const TensorVector& v) const;
    const std::map<DirectedGraph, Rational>& values() const { return values_; }

private:
    std::map<DirectedGraph, Rational> values_;
};

// The cochain determined by W on words up to the given length: the
// product of letter values twisted by the cobar suspension signs, so that
// pairing against D[G] reproduces delta_on_weight.
DualCochain weight_cochain(const WeightFunctional& w, const std::vector<CobarWord>& support);

// delta W (Gamma) = W(d Gamma) + W(Delta_b Gamma)
Rational delta_on_weight(const WeightFunctional& w, const GraphTerm& t, const ClassPredicate& c);

struct CocycleReport {
    bool ok = true;
    std::vector<DirectedGraph> witnesses;  // excess -1 graphs with delta W != 0
};
CocycleReport is_cocycle(const WeightFunctional& w, int n_max, int m_max, const ClassPredicate& c);

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RankRow {
    int degree = 0;
    long dim = 0;
    long rank = 0;     // rank of D out of this degree (= rank of the dual map into it)
    long nullity = 0;  // dim - rank
    long escaped = 0;  // basis words whose D-image leaves the truncation
};

struct RankTable {
    std::vector<RankRow> rows;
    bool closed = true;           // no escapes anywhere
    bool d_squared_zero = true;   // checked matrix-wise when closed
    bool im_in_ker = true;        // rank_{g} + rank_{g+1} <= dim_g whenever meaningful
    long basis_size = 0;
};

// Basis: words of length <= len_max with total edge count <= edge_max and
// total boundary count <= bd_max (edge count alone leaves the letter set
// infinite). Exact ranks per cobar degree via fraction-free elimination.
RankTable truncated_cohomology_ranks(int edge_max, int len_max, int bd_max, const ClassPredicate& c,
                                     long basis_cap = 20000);

// All admissible nonempty canonical letters within the bounds.
std::vector<DirectedGraph> cobar_letters(int edge_max, int bd_max, const ClassPredicate& c);

} // namespace feyngraph
