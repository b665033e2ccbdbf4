#include <doctest.h>

#include <map>
#include <random>

#include "dcpm/euler_tour_tree.hpp"
#include "support/ett_fuzz.hpp"
#include "support/validation.hpp"

using namespace dcpm;
using namespace dcpm::ett;

namespace {

using Arc = std::pair<std::int64_t, std::int64_t>;

std::vector<Arc> arcs_of(const EtNode* any) {
  std::vector<Arc> out;
  for (const EtNode* n : in_order_arcs(any)) out.emplace_back(n->end_a, n->end_b);
  return out;
}

bool cyclically_equal(std::vector<Arc> got, const std::vector<Arc>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t shift = 0; shift < got.size(); ++shift) {
    if (got == want) return true;
    std::rotate(got.begin(), got.begin() + 1, got.end());
  }
  return false;
}

// Small manual forest holding its nodes.
struct Forest {
  std::map<int, std::unique_ptr<EtNode>> loops;
  std::map<std::pair<int, int>, std::array<std::unique_ptr<EtNode>, 2>> edges;

  EtNode* loop(int id) {
    auto it = loops.find(id);
    if (it == loops.end()) it = loops.emplace(id, make_loop(id)).first;
    return it->second.get();
  }
  void link(int a, int b) {
    auto ab = make_arc(a, b);
    auto ba = make_arc(b, a);
    ett::link(loop(a), loop(b), ab.get(), ba.get());
    edges.emplace(std::pair{a, b}, std::array{std::move(ab), std::move(ba)});
  }
  void cut(int a, int b) {
    auto it = edges.find({a, b});
    REQUIRE(it != edges.end());
    ett::cut(it->second[0].get(), it->second[1].get());
    edges.erase(it);
  }
};

// The five-node spanning tree whose tour the examples use: edges (1,2),
// (2,4), (2,3), (3,5), linked in an order that reproduces the reference
// tour exactly.
const std::vector<Arc> kReferenceTour = {{1, 1}, {1, 2}, {2, 2}, {2, 4}, {4, 4}, {4, 2}, {2, 3},
                                         {3, 3}, {3, 5}, {5, 5}, {5, 3}, {3, 2}, {2, 1}};

Forest reference_forest() {
  Forest f;
  f.link(3, 5);
  f.link(2, 4);
  f.link(2, 3);
  f.link(1, 2);
  return f;
}

}  // namespace

TEST_CASE("connectivity basics") {
  Forest f;
  CHECK(connected(f.loop(1), f.loop(1)));
  CHECK(!connected(f.loop(1), f.loop(2)));
  Forest r = reference_forest();
  CHECK(connected(r.loop(1), r.loop(5)));
}

TEST_CASE("linking two singletons yields the four-arc tour") {
  Forest f;
  f.link(1, 2);
  CHECK(arcs_of(f.loop(1)) == std::vector<Arc>{{1, 1}, {1, 2}, {2, 2}, {2, 1}});
  CHECK(tree_size(f.loop(1)) == 4);  // 2(2-1)+2
  CHECK_THROWS_AS(
      [&] {
        auto ab = make_arc(1, 2);
        auto ba = make_arc(2, 1);
        ett::link(f.loop(1), f.loop(2), ab.get(), ba.get());
      }(),
      std::invalid_argument);
}

TEST_CASE("five-node reference tour") {
  Forest f = reference_forest();
  CHECK(tree_size(f.loop(1)) == 13);  // 2(5-1)+5
  CHECK(cyclically_equal(arcs_of(f.loop(1)), kReferenceTour));
  CHECK(testing::valid_tour(f.loop(1)));
}

TEST_CASE("linking preserves values on both sides") {
  Forest f;
  add_value(f.loop(1), 6);   // node 1 carries 7
  add_value(f.loop(2), 40);  // node 2 carries 42
  f.link(1, 2);
  CHECK(ancestor_sum_value(f.loop(1)) == 7);
  CHECK(ancestor_sum_value(f.loop(2)) == 42);
}

TEST_CASE("cutting the reference tree") {
  Forest f = reference_forest();
  f.cut(2, 3);
  CHECK(!connected(f.loop(2), f.loop(3)));
  CHECK(connected(f.loop(1), f.loop(4)));
  CHECK(connected(f.loop(3), f.loop(5)));
  CHECK(tree_size(f.loop(1)) == 7);  // {1,2,4}
  CHECK(tree_size(f.loop(3)) == 4);  // {3,5}
  CHECK(testing::valid_tour(f.loop(1)));
  CHECK(testing::valid_tour(f.loop(3)));
}

TEST_CASE("cutting the only edge of a two-node tree") {
  Forest f;
  f.link(1, 2);
  f.cut(1, 2);
  CHECK(!connected(f.loop(1), f.loop(2)));
  CHECK(tree_size(f.loop(1)) == 1);
  CHECK(tree_size(f.loop(2)) == 1);
}

TEST_CASE("cut rejects arcs from different trees") {
  Forest f;
  f.link(1, 2);
  f.link(3, 4);
  auto& e1 = f.edges.at({1, 2});
  auto& e2 = f.edges.at({3, 4});
  CHECK_THROWS_AS(ett::cut(e1[0].get(), e2[1].get()), std::invalid_argument);
}

TEST_CASE("value semantics") {
  auto nine = make_loop(9);
  CHECK(value(nine.get()) == 9);
  auto arc = make_arc(1, 2);
  CHECK(value(arc.get()) == 0);
  add_value(nine.get(), 4);
  CHECK(value(nine.get()) == 13);

  auto seven = make_loop(7);
  add_value(seven.get(), 0);
  CHECK(value(seven.get()) == 7);
  add_value(seven.get(), -5);
  CHECK(value(seven.get()) == 2);
}

TEST_CASE("add_value reaches every loop of the tree") {
  Forest f = reference_forest();
  f.link(1, 6);
  std::map<int, std::int64_t> before;
  for (int id = 1; id <= 6; ++id) before[id] = ancestor_sum_value(f.loop(id));
  add_value(f.loop(3), 3);
  for (int id = 1; id <= 6; ++id) CHECK(ancestor_sum_value(f.loop(id)) == before[id] + 3);
  // Nodes outside the tree are untouched.
  EtNode* other = f.loop(9);
  add_value(f.loop(2), 11);
  CHECK(ancestor_sum_value(other) == 9);
}

TEST_CASE("splaying never changes represented values") {
  std::mt19937_64 rng(41);
  Forest f = reference_forest();
  f.link(1, 6);
  f.link(4, 7);
  std::map<int, std::int64_t> want;
  for (int id = 1; id <= 7; ++id) want[id] = ancestor_sum_value(f.loop(id));
  std::uniform_int_distribution<int> pick(1, 7);
  for (int i = 0; i < 500; ++i) {
    splay(f.loop(pick(rng)));
    const int id = pick(rng);
    CHECK(ancestor_sum_value(f.loop(id)) == want[id]);
  }
}

TEST_CASE("randomized forest against the BFS oracle") {
  testing::EttFuzzer fuzz(60, 1234);
  const std::string err = fuzz.run(1500);
  CHECK_MESSAGE(err.empty(), err);
}
