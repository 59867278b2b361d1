#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bhsp/bool_function.hpp"
#include "bhsp/rng.hpp"

namespace bhsp {

// Decision tree over x_1..x_n. Grammar:
//   tree := '0' | '1' | '(' 'x'<index> tree tree ')'
// The first subtree is taken when the variable is 0.
class DecisionTree {
 public:
  struct Node {
    int var = 0;  // 1-based variable index; 0 marks a leaf
    int value = 0;
    std::int32_t child[2] = {-1, -1};

    bool is_leaf() const noexcept { return var == 0; }
  };

  // Validates: variable indices in 1..n, no variable repeated on a path.
  DecisionTree(int n, std::vector<Node> nodes);

  int n() const noexcept { return n_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const Node& root() const { return nodes_.front(); }

  int evaluate(Point x) const;

 private:
  int n_;
  std::vector<Node> nodes_;  // nodes_[0] is the root
};

// One conjunction of the DNF: the path to a 1-leaf. Variable j+1 is fixed
// when bit j of `mask` is set, and must equal bit j of `values`.
struct DnfTerm {
  Point mask = 0;
  Point values = 0;

  bool satisfied_by(Point x) const noexcept { return (x & mask) == values; }
};

DecisionTree parse_tree(std::string_view text, int n);

// Tree file: optional first line "n=<k>", then the tree expression.
// Without a header n is the largest variable index used (at least 1).
DecisionTree parse_tree_file(std::string_view text);

std::string format_tree(const DecisionTree& tree);

BooleanFunction tree_to_function(const DecisionTree& tree);
std::vector<DnfTerm> dnf_terms(const DecisionTree& tree);
BooleanFunction function_from_dnf(int n, const std::vector<DnfTerm>& terms);

int tree_height(const DecisionTree& tree);

struct SparsityBound {
  mpq_class exact_fraction;  // sum_{k<=h} C(n,k) / 2^n
  double entropy_bound = 0;  // (2^-n)^{1 - H(h/n)}
};

SparsityBound sparsity_bound(int n, int h);
double binary_entropy(double p);

// True when every Fourier coefficient of weight above the tree height is zero.
bool verify_degree_bound(const DecisionTree& tree);

// Random tree of height at most `max_height`; each internal node picks a
// variable not yet used on its path, and a subtree becomes a leaf early with
// probability `leaf_probability`.
DecisionTree random_tree(int n, int max_height, Rng& rng, double leaf_probability = 0.2);

// Fraction of `samples` random trees whose function has a nonzero b-shift.
double degenerate_tree_fraction(int n, int max_height, std::uint64_t samples, std::uint64_t seed);

}  // namespace bhsp

namespace bhsp {

// The 10-variable, height-5 example tree whose spectrum has 928 zeros.
inline constexpr std::string_view kF10Tree =
    "(x2\n"
    "  (x1\n"
    "    (x5 (x4 (x10 0 1) 1) 1)\n"
    "    (x7 (x5 (x3 0 1) 0) (x6 0 (x9 0 1))))\n"
    "  (x7\n"
    "    (x8 (x10 (x9 1 0) 1) (x4 (x9 1 0) 1))\n"
    "    (x1 1 (x5 (x3 1 0) (x10 0 1)))))\n";

}  // namespace bhsp
