#include "bhsp/dtree.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include <fmt/core.h>

#include "bhsp/error.hpp"
#include "bhsp/fourier.hpp"
#include "bhsp/shifts.hpp"

namespace bhsp {
namespace {

using Node = DecisionTree::Node;

class TreeParser {
 public:
  TreeParser(std::string_view text, int n) : text_(text), n_(n) {}

  std::vector<Node> parse() {
    parse_node(0);
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return std::move(nodes_);
  }

  int max_variable() const { return max_var_; }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::int32_t parse_node(std::uint32_t used) {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    const auto index = static_cast<std::int32_t>(nodes_.size());
    if (c == '0' || c == '1') {
      ++pos_;
      nodes_.push_back(Node{0, c - '0', {-1, -1}});
      return index;
    }
    if (c != '(') throw ParseError(fmt::format("expected '0', '1' or '(' but found '{}'", c), pos_);
    ++pos_;
    skip();
    const std::size_t var_pos = pos_;
    if (pos_ >= text_.size() || text_[pos_] != 'x') throw ParseError("expected variable 'x<index>'", pos_);
    ++pos_;
    long var = 0;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      var = var * 10 + (text_[pos_] - '0');
      if (var > 1000) throw ParseError("variable index too large", var_pos);
      ++pos_;
    }
    if (pos_ == digits) throw ParseError("expected digits after 'x'", pos_);
    if (var < 1 || var > n_) {
      throw ParseError(fmt::format("variable x{} out of range 1..{}", var, n_), var_pos);
    }
    const std::uint32_t bit = std::uint32_t{1} << (var - 1);
    if (used & bit) throw ParseError(fmt::format("repeated variable x{} on path", var), var_pos);
    max_var_ = std::max(max_var_, static_cast<int>(var));

    nodes_.push_back(Node{static_cast<int>(var), 0, {-1, -1}});
    const std::int32_t zero = parse_node(used | bit);
    const std::int32_t one = parse_node(used | bit);
    nodes_[index].child[0] = zero;
    nodes_[index].child[1] = one;
    skip();
    if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
    return index;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
  std::vector<Node> nodes_;
};

void validate(const std::vector<Node>& nodes, int n, std::int32_t index, std::uint32_t used,
              std::size_t& visited) {
  if (index < 0 || static_cast<std::size_t>(index) >= nodes.size()) {
    throw std::invalid_argument("decision tree child index out of range");
  }
  if (++visited > nodes.size()) throw std::invalid_argument("decision tree nodes do not form a tree");
  const Node& node = nodes[index];
  if (node.is_leaf()) {
    if (node.value != 0 && node.value != 1) throw std::invalid_argument("leaf value must be 0 or 1");
    return;
  }
  if (node.var < 1 || node.var > n) {
    throw std::invalid_argument(fmt::format("variable x{} out of range 1..{}", node.var, n));
  }
  const std::uint32_t bit = std::uint32_t{1} << (node.var - 1);
  if (used & bit) throw std::invalid_argument(fmt::format("repeated variable x{} on path", node.var));
  validate(nodes, n, node.child[0], used | bit, visited);
  validate(nodes, n, node.child[1], used | bit, visited);
}

void collect_terms(const std::vector<Node>& nodes, std::int32_t index, DnfTerm term,
                   std::vector<DnfTerm>& out) {
  const Node& node = nodes[index];
  if (node.is_leaf()) {
    if (node.value) out.push_back(term);
    return;
  }
  const Point bit = Point{1} << (node.var - 1);
  collect_terms(nodes, node.child[0], DnfTerm{term.mask | bit, term.values}, out);
  collect_terms(nodes, node.child[1], DnfTerm{term.mask | bit, term.values | bit}, out);
}

int height_of(const std::vector<Node>& nodes, std::int32_t index) {
  const Node& node = nodes[index];
  if (node.is_leaf()) return 0;
  return 1 + std::max(height_of(nodes, node.child[0]), height_of(nodes, node.child[1]));
}

void format_node(const std::vector<Node>& nodes, std::int32_t index, std::string& out) {
  const Node& node = nodes[index];
  if (node.is_leaf()) {
    out.push_back(static_cast<char>('0' + node.value));
    return;
  }
  out += fmt::format("(x{} ", node.var);
  format_node(nodes, node.child[0], out);
  out.push_back(' ');
  format_node(nodes, node.child[1], out);
  out.push_back(')');
}

std::int32_t grow(std::vector<Node>& nodes, int n, int depth, int max_height, std::uint32_t used, Rng& rng,
                  double leaf_probability) {
  const auto index = static_cast<std::int32_t>(nodes.size());
  const int free_vars = n - __builtin_popcount(used);
  const bool leaf = depth >= max_height || free_vars == 0 || (depth > 0 && rng.uniform() < leaf_probability);
  if (leaf) {
    nodes.push_back(Node{0, static_cast<int>(rng.next() & 1), {-1, -1}});
    return index;
  }
  int pick = static_cast<int>(rng.next() % static_cast<std::uint64_t>(free_vars));
  int var = 0;
  for (int v = 1; v <= n; ++v) {
    if (used & (std::uint32_t{1} << (v - 1))) continue;
    if (pick-- == 0) {
      var = v;
      break;
    }
  }
  nodes.push_back(Node{var, 0, {-1, -1}});
  const std::uint32_t next = used | (std::uint32_t{1} << (var - 1));
  const std::int32_t zero = grow(nodes, n, depth + 1, max_height, next, rng, leaf_probability);
  const std::int32_t one = grow(nodes, n, depth + 1, max_height, next, rng, leaf_probability);
  nodes[index].child[0] = zero;
  nodes[index].child[1] = one;
  return index;
}

}  // namespace

DecisionTree::DecisionTree(int n, std::vector<Node> nodes) : n_(n), nodes_(std::move(nodes)) {
  if (n < 1 || n > kMaxVariables) {
    throw std::invalid_argument(fmt::format("n must be in 1..{}, got {}", kMaxVariables, n));
  }
  if (nodes_.empty()) throw std::invalid_argument("decision tree has no nodes");
  std::size_t visited = 0;
  validate(nodes_, n_, 0, 0, visited);
  if (visited != nodes_.size()) throw std::invalid_argument("decision tree has unreachable nodes");
}

int DecisionTree::evaluate(Point x) const {
  const Node* node = &nodes_.front();
  while (!node->is_leaf()) node = &nodes_[node->child[(x >> (node->var - 1)) & 1]];
  return node->value;
}

DecisionTree parse_tree(std::string_view text, int n) {
  if (n < 1 || n > kMaxVariables) {
    throw std::invalid_argument(fmt::format("n must be in 1..{}, got {}", kMaxVariables, n));
  }
  TreeParser parser(text, n);
  return DecisionTree(n, parser.parse());
}

DecisionTree parse_tree_file(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (text.substr(pos, 2) == "n=") {
    std::size_t end = pos + 2;
    int n = 0;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
      n = n * 10 + (text[end] - '0');
      if (n > kMaxVariables) throw ParseError("n too large", pos);
      ++end;
    }
    if (end == pos + 2) throw ParseError("expected integer after 'n='", end);
    // Keep offsets relative to the whole file by blanking the header.
    std::string body(text);
    std::fill(body.begin() + static_cast<std::ptrdiff_t>(pos), body.begin() + static_cast<std::ptrdiff_t>(end), ' ');
    return parse_tree(body, n);
  }
  TreeParser parser(text, kMaxVariables);
  std::vector<Node> nodes = parser.parse();
  return DecisionTree(std::max(1, parser.max_variable()), std::move(nodes));
}

std::string format_tree(const DecisionTree& tree) {
  std::string out;
  format_node(tree.nodes(), 0, out);
  return out;
}

BooleanFunction tree_to_function(const DecisionTree& tree) {
  std::vector<std::uint8_t> table(std::size_t{1} << tree.n());
  for (Point x = 0; x < table.size(); ++x) table[x] = static_cast<std::uint8_t>(tree.evaluate(x));
  return BooleanFunction(tree.n(), std::move(table));
}

std::vector<DnfTerm> dnf_terms(const DecisionTree& tree) {
  std::vector<DnfTerm> out;
  collect_terms(tree.nodes(), 0, DnfTerm{}, out);
  return out;
}

BooleanFunction function_from_dnf(int n, const std::vector<DnfTerm>& terms) {
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (Point x = 0; x < table.size(); ++x) {
    table[x] = std::any_of(terms.begin(), terms.end(), [x](const DnfTerm& t) { return t.satisfied_by(x); });
  }
  return BooleanFunction(n, std::move(table));
}

int tree_height(const DecisionTree& tree) { return height_of(tree.nodes(), 0); }

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

SparsityBound sparsity_bound(int n, int h) {
  if (n < 1 || h < 0 || h > n) throw std::invalid_argument(fmt::format("need 0 <= h <= n, got n={} h={}", n, h));
  mpz_class count = 0;
  for (int k = 0; k <= h; ++k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    count += c;
  }
  mpz_class size;
  mpz_ui_pow_ui(size.get_mpz_t(), 2, static_cast<unsigned long>(n));
  SparsityBound bound;
  bound.exact_fraction = mpq_class(count, size);
  bound.exact_fraction.canonicalize();
  bound.entropy_bound = std::exp2(-static_cast<double>(n) * (1.0 - binary_entropy(static_cast<double>(h) / n)));
  return bound;
}

bool verify_degree_bound(const DecisionTree& tree) {
  const int h = tree_height(tree);
  const auto w = walsh_coefficients(tree_to_function(tree));
  for (Point i = 0; i < w.size(); ++i) {
    if (__builtin_popcount(i) > h && w[i] != 0) return false;
  }
  return true;
}

DecisionTree random_tree(int n, int max_height, Rng& rng, double leaf_probability) {
  if (n < 1 || n > kMaxVariables || max_height < 0) {
    throw std::invalid_argument(fmt::format("invalid random tree shape n={} height={}", n, max_height));
  }
  std::vector<Node> nodes;
  grow(nodes, n, 0, max_height, 0, rng, leaf_probability);
  return DecisionTree(n, std::move(nodes));
}

double degenerate_tree_fraction(int n, int max_height, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  std::uint64_t degenerate = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng = Rng::substream(seed, i);
    const ShiftStructure s = find_b_shifts(tree_to_function(random_tree(n, max_height, rng)));
    if (!s.undetectable_basis.empty() || s.anti_shift) ++degenerate;
  }
  return static_cast<double>(degenerate) / static_cast<double>(samples);
}

}  // namespace bhsp
