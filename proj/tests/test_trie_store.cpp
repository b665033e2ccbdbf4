#include <doctest.h>

#include <random>

#include "dcpm/clique_enum.hpp"
#include "dcpm/trie_store.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace dcpm;
namespace dt = dcpm::testing;

namespace {

// The two cliques rooted at vertex 5 used throughout: sizes 3 and 4 sharing
// only the root and their last vertex.
Trie two_path_trie() {
  Trie t(5);
  t.add({5, 6, 9}, 10);
  t.add({5, 7, 8, 9}, 11);
  return t;
}

std::size_t chain_length(const Trie& t, VertexId v) {
  std::size_t len = 0;
  for (const TrieNode* x = t.node_list_head(v); x; x = x->next) ++len;
  return len;
}

}  // namespace

TEST_CASE("trie add and lookup") {
  Trie t = two_path_trie();
  CHECK(t.clique_count() == 2);
  CHECK(t.node_count() == 6);  // 5; 6,9; 7,8,9
  CHECK(t.get_id({5, 6, 9}) == 10);
  CHECK(t.get_id({5, 7, 8, 9}) == 11);
  CHECK(t.get_id({5, 6}) == -1);   // internal node
  CHECK(t.get_id({5, 9}) == -1);   // absent path
  CHECK(chain_length(t, 9) == 2);  // one node per branch
  CHECK_THROWS_AS(t.add({5, 6, 9}, 12), std::invalid_argument);
}

TEST_CASE("singleton clique: root doubles as leaf") {
  Trie t(1);
  t.add({1}, 3);
  CHECK(t.get_id({1}) == 3);
  t.remove({1});
  CHECK(t.empty());
}

TEST_CASE("two cliques with a shared prefix") {
  Trie t(2);
  t.add({2, 3}, 1);
  t.add({2, 4}, 2);
  CHECK(t.root()->children.size() == 2);
  CHECK(chain_length(t, 3) == 1);
  CHECK(chain_length(t, 4) == 1);
}

TEST_CASE("trie removal prunes exactly the dead branch") {
  SUBCASE("removing one of two paths") {
    Trie t = two_path_trie();
    t.remove({5, 6, 9});
    CHECK(t.get_id({5, 6, 9}) == -1);
    CHECK(t.get_id({5, 7, 8, 9}) == 11);
    CHECK(t.node_count() == 4);
    CHECK(chain_length(t, 9) == 1);
    CHECK(chain_length(t, 6) == 0);
  }
  SUBCASE("shared prefix nodes survive while another path needs them") {
    Trie t(2);
    t.add({2, 3, 5}, 1);
    t.add({2, 3, 6}, 2);
    t.remove({2, 3, 5});
    CHECK(t.get_id({2, 3, 6}) == 2);
    CHECK(chain_length(t, 3) == 1);
  }
  SUBCASE("absent clique") {
    Trie t = two_path_trie();
    CHECK_THROWS_AS(t.remove({5, 8}), std::invalid_argument);
  }
}

TEST_CASE("round trip: add, get, remove, get") {
  std::mt19937_64 rng(5);
  Graph g = dt::random_er(20, 0.35, rng);
  TrieTable table;
  McId id = 0;
  auto mcs = list_mcs(g);
  for (const Clique& m : mcs) table.add_clique(m, ++id);
  CHECK(table.clique_count() == mcs.size());
  id = 0;
  for (const Clique& m : mcs) {
    CHECK(table.get_id(m) == ++id);
    CHECK(table.clique_of(id) == m);
  }
  for (const Clique& m : mcs) {
    table.remove_clique(m);
    CHECK(table.get_id(m) == -1);
  }
  CHECK(table.clique_count() == 0);
  CHECK(table.tries().empty());
}

TEST_CASE("node sharing never exceeds the unshared footprint") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 10; ++round) {
    Graph g = dt::random_er(18, 0.4, rng);
    TrieTable table;
    McId id = 0;
    std::size_t vertex_total = 0;
    std::map<VertexId, std::size_t> per_root_paths;
    for (const Clique& m : list_mcs(g)) {
      table.add_clique(m, ++id);
      vertex_total += m.size();
      ++per_root_paths[m.front()];
    }
    std::size_t node_total = 0;
    for (const auto& [root, trie] : table.tries()) {
      CHECK(trie.root_key() == root);
      CHECK(trie.clique_count() == per_root_paths[root]);
      node_total += trie.node_count();
    }
    CHECK(node_total <= vertex_total);
  }
}

TEST_CASE("paths_through") {
  Trie t = two_path_trie();
  SUBCASE("from a leaf") {
    const TrieNode* n = t.root()->children.at(6)->children.at(9).get();
    auto paths = t.paths_through(n);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] == std::pair<McId, Clique>{10, {5, 6, 9}});
  }
  SUBCASE("from the root") {
    auto paths = t.paths_through(t.root());
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].second == Clique{5, 6, 9});
    CHECK(paths[1].second == Clique{5, 7, 8, 9});
  }
  SUBCASE("from a shared internal node") {
    Trie s(2);
    s.add({2, 3, 5}, 1);
    s.add({2, 3, 6}, 2);
    auto paths = s.paths_through(s.root()->children.at(3).get());
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].second == Clique{2, 3, 5});
    CHECK(paths[1].second == Clique{2, 3, 6});
  }
}

TEST_CASE("neighbor_mcs on the fixtures") {
  auto build_table = [](const Graph& g) {
    TrieTable table;
    McId id = 0;
    for (const Clique& m : list_mcs(g)) table.add_clique(m, ++id);
    return table;
  };
  SUBCASE("lone clique has no neighbors") {
    Graph g = dt::fix_tri();
    TrieTable table = build_table(g);
    CHECK(table.neighbor_mcs(g, {1, 2, 3}, 1).empty());
  }
  SUBCASE("diamond") {
    Graph g = dt::fix_diamond();
    TrieTable table = build_table(g);
    auto nbrs = table.neighbor_mcs(g, {1, 2, 3}, 1);
    REQUIRE(nbrs.size() == 1);
    CHECK(nbrs.at(2) == Clique{2, 3, 4});
  }
  SUBCASE("bowtie, asking from the higher-rooted triangle") {
    Graph g = dt::fix_bowtie();
    TrieTable table = build_table(g);
    auto nbrs = table.neighbor_mcs(g, {3, 4, 5}, 2);
    REQUIRE(nbrs.size() == 1);
    CHECK(nbrs.at(1) == Clique{1, 2, 3});
  }
}

TEST_CASE("neighbor_mcs equals the brute-force overlap scan") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> dens(0.1, 0.45);
  for (int round = 0; round < 25; ++round) {
    Graph g = dt::random_er(10 + round, dens(rng), rng);
    auto mcs = list_mcs(g);
    TrieTable table;
    McId id = 0;
    for (const Clique& m : mcs) table.add_clique(m, ++id);
    id = 0;
    for (const Clique& m : mcs) {
      ++id;
      std::map<McId, Clique> expected;
      McId other = 0;
      for (const Clique& cand : mcs) {
        ++other;
        if (other != id && clique_overlap(m, cand) > 0) expected.emplace(other, cand);
      }
      CHECK(table.neighbor_mcs(g, m, id) == expected);
    }
  }
}
