#include "spider/overlay.hpp"

#include <stdexcept>

namespace spider {

std::vector<std::uint64_t> first_primes(std::size_t n) {
  std::vector<std::uint64_t> primes;
  primes.reserve(n);
  std::uint64_t candidate = 2;
  while (primes.size() < n) {
    bool is_prime = true;
    for (std::uint64_t p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        is_prime = false;
        break;
      }
    }
    if (is_prime) primes.push_back(candidate);
    ++candidate;
  }
  return primes;
}

std::uint64_t PrimeLabeling::prime(const std::string& vertex) const {
  auto it = prime_of.find(vertex);
  if (it == prime_of.end()) {
    throw std::invalid_argument("unlabeled vertex '" + vertex + "'");
  }
  return it->second;
}

BigInt PrimeLabeling::full_product() const {
  BigInt product = 1;
  for (const auto& v : order) product *= prime_of.at(v);
  return product;
}

PrimeLabeling assign_primes(const Graph& graph) {
  if (graph.vertices().empty()) {
    throw std::invalid_argument("assign_primes: graph has no vertices");
  }
  PrimeLabeling labeling;
  labeling.order = graph.vertices();  // already ascending
  auto primes = first_primes(labeling.order.size());
  for (std::size_t i = 0; i < labeling.order.size(); ++i) {
    labeling.prime_of[labeling.order[i]] = primes[i];
  }
  return labeling;
}

RelayId Overlay::relay(const std::string& vertex) const {
  auto it = relay_of_vertex.find(vertex);
  if (it == relay_of_vertex.end()) {
    throw std::invalid_argument("unknown vertex '" + vertex + "'");
  }
  return it->second;
}

const std::string& Overlay::vertex(RelayId id) const {
  if (id >= vertex_of_relay.size()) {
    throw std::invalid_argument("unknown relay id " + std::to_string(id));
  }
  return vertex_of_relay[id];
}

std::vector<ArrayId> Overlay::arrays_from(const std::string& vertex) const {
  RelayId id = relay(vertex);
  std::vector<ArrayId> out;
  for (const auto& spec : topology.arrays) {
    if (spec.from == id) out.push_back(spec.id);
  }
  return out;
}

Overlay build_overlay(const Graph& graph, const PrimeLabeling& labeling) {
  Overlay overlay;
  overlay.labeling = labeling;
  for (const auto& v : graph.vertices()) {
    RelayId id = static_cast<RelayId>(overlay.vertex_of_relay.size());
    overlay.relay_of_vertex[v] = id;
    overlay.vertex_of_relay.push_back(v);
    overlay.topology.relays.push_back(
        {id, Behavior::prime_vertex(labeling.prime(v))});
  }
  ArrayId next_array = 0;
  for (const auto& e : graph.edges()) {
    RelayId u = overlay.relay_of_vertex.at(e.u);
    RelayId v = overlay.relay_of_vertex.at(e.v);
    overlay.topology.arrays.push_back({next_array++, u, v, e.weight});
    overlay.topology.arrays.push_back({next_array++, v, u, e.weight});
  }
  return overlay;
}

std::set<std::string> factor_amplitude(const BigInt& amplitude,
                                       const PrimeLabeling& labeling) {
  if (amplitude < 1) {
    throw std::invalid_argument("factor_amplitude: amplitude must be >= 1");
  }
  BigInt rest = amplitude;
  std::set<std::string> visited;
  for (const auto& v : labeling.order) {
    BigInt p = labeling.prime_of.at(v);
    if (rest % p == 0) {
      rest /= p;
      if (rest % p == 0) {
        throw std::invalid_argument(
            "factor_amplitude: amplitude not squarefree (p=" + p.str() + ")");
      }
      visited.insert(v);
    }
  }
  if (rest != 1) {
    throw std::invalid_argument("factor_amplitude: foreign factor " +
                                rest.str());
  }
  return visited;
}

std::string visited_bits(const BigInt& amplitude,
                         const PrimeLabeling& labeling) {
  auto visited = factor_amplitude(amplitude, labeling);
  std::string bits(labeling.order.size(), '0');
  for (std::size_t i = 0; i < labeling.order.size(); ++i) {
    if (visited.count(labeling.order[i])) bits[i] = '1';
  }
  return bits;
}

}  // namespace spider
