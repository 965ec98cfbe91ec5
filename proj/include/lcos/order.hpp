#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace lcos {

// An acyclic tournament is fully determined by its vertex order: u -> v iff
// u precedes v. Stored as the order, ranks derived.
struct AcyclicTournament {
  std::vector<std::string> order;

  explicit AcyclicTournament(std::vector<std::string> order_in);

  int size() const { return static_cast<int>(order.size()); }
  bool contains(const std::string& name) const { return ranks_.count(name) > 0; }
  // Throws ValidationError for unknown names.
  int rank(const std::string& name) const;
  bool before(const std::string& a, const std::string& b) const {
    return rank(a) < rank(b);
  }

  bool operator==(const AcyclicTournament& other) const {
    return order == other.order;
  }
  bool operator<(const AcyclicTournament& other) const {
    return order < other.order;
  }

 private:
  std::unordered_map<std::string, int> ranks_;
};

}  // namespace lcos
