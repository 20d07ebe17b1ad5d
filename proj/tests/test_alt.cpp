#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "updlp/alt_semantics.hpp"
#include "updlp/parser.hpp"
#include "updlp/update.hpp"

using namespace updlp;

namespace {

UpdateSequence tv_sequence(int layers) {
  std::vector<Program> ps;
  ps.push_back(parse_program(
      "sleep :- not tv_on. night. tv_on. watch_tv :- tv_on."));
  ps.push_back(parse_program("-tv_on :- power_failure. power_failure."));
  if (layers >= 3) ps.push_back(parse_program("-power_failure."));
  return make_sequence(std::move(ps));
}

UpdateSequence concert() {
  return make_sequence(
      {parse_program("-concert_friday."),
       parse_program("-final_rehearsal_friday. -concert_saturday."),
       parse_program(
           "concert_friday :- not final_rehearsal_friday. "
           "final_rehearsal_friday :- not concert_friday. "
           "concert_saturday :- final_rehearsal_friday, not concert_sunday. "
           "concert_sunday :- final_rehearsal_friday, not concert_saturday.")});
}

std::set<Interpretation> as_set(const AnswerSetList& l) {
  return std::set<Interpretation>(l.begin(), l.end());
}

Program random_layer(std::mt19937& g, const std::vector<std::string>& pool,
                     int max_rules, bool atoms_only_bodies) {
  auto rnd = [&](int n) { return n ? static_cast<int>(g() % n) : 0; };
  Program p;
  int n = 1 + rnd(max_rules);
  for (int i = 0; i < n; ++i) {
    Rule r;
    Literal h = pos(pool[rnd(static_cast<int>(pool.size()))]);
    if (rnd(100) < 40) h = h.complement();
    r.head = lit_head(h);
    int body = rnd(3);
    for (int k = 0; k < body; ++k) {
      Literal l = pos(pool[rnd(static_cast<int>(pool.size()))]);
      if (!atoms_only_bodies && rnd(100) < 40) l = l.complement();
      if (rnd(2))
        r.body_pos.insert(l);
      else
        r.body_wneg.insert(l);
    }
    p.rules.push_back(std::move(r));
  }
  return p;
}

UpdateSequence random_sequence(std::mt19937& g,
                               const std::vector<std::string>& pool,
                               int layers, int max_rules,
                               bool atoms_only_bodies = false) {
  std::vector<Program> ps;
  for (int i = 0; i < layers; ++i)
    ps.push_back(random_layer(g, pool, max_rules, atoms_only_bodies));
  return make_sequence(std::move(ps));
}

UpdateSequence prefix_of(const UpdateSequence& seq, int j) {
  std::vector<Program> ps(seq.programs.begin(), seq.programs.begin() + j);
  return make_sequence(std::move(ps), seq.mode);
}

}  // namespace

TEST_CASE("later objects override earlier conflicting rules") {
  auto seq = make_sequence({parse_program("a :- c."),
                            parse_program("-a :- b.")});
  InheritanceProgram ip = to_inheritance(seq);
  REQUIRE(ip.objects.size() == 2);
  REQUIRE(ip.more_specific(1, 0));
  REQUIRE_FALSE(ip.more_specific(0, 1));

  const Rule& old_rule = ip.objects[0].rules[0];
  const Rule& new_rule = ip.objects[1].rules[0];
  Interpretation winning = interp({pos("b"), pos("c"), sneg("a")});
  REQUIRE(overrides(ip, winning, 1, new_rule, 0, old_rule));
  // Direction follows specificity.
  REQUIRE_FALSE(overrides(ip, winning, 0, old_rule, 1, new_rule));
  // The displacing rule must itself be applicable.
  REQUIRE_FALSE(overrides(ip, interp({pos("c"), sneg("a")}), 1, new_rule, 0,
                          old_rule));
  // So must the rule being displaced.
  REQUIRE_FALSE(overrides(ip, interp({pos("b"), sneg("a")}), 1, new_rule, 0,
                          old_rule));
  // And the winner's conclusion has to stand in the interpretation.
  REQUIRE_FALSE(overrides(ip, interp({pos("b"), pos("c")}), 1, new_rule, 0,
                          old_rule));
}

TEST_CASE("the inheritance reduct drops overridden and defeated rules") {
  auto seq = make_sequence({parse_program("a. b :- not c."),
                            parse_program("-a.")});
  InheritanceProgram ip = to_inheritance(seq);

  Interpretation i = interp({sneg("a"), pos("b")});
  Program red = inh_reduct(ip, i);
  // "a." is overridden; "b :- not c." survives with its weak body stripped.
  REQUIRE(red.rules.size() == 2);
  for (const auto& r : red.rules) {
    REQUIRE(r.body_wneg.empty());
    REQUIRE(r.head.lit != pos("a"));
  }
  REQUIRE(is_inh_answer_set(ip, i));
  REQUIRE_FALSE(is_inh_answer_set(ip, interp({pos("a"), pos("b")})));

  Interpretation defeated = interp({sneg("a"), pos("c")});
  Program red2 = inh_reduct(ip, defeated);
  for (const auto& r : red2.rules) REQUIRE(r.head.lit.atom != "b");
}

TEST_CASE("inheritance answer sets equal update answer sets on fixtures") {
  for (auto seq : {tv_sequence(2), tv_sequence(3), concert()}) {
    REQUIRE(inh_answer_sets(to_inheritance(seq)) == update_answer_sets(seq));
  }
}

TEST_CASE("inheritance membership agrees candidate by candidate") {
  std::mt19937 g(6023);
  std::vector<std::string> pool{"a", "b", "c"};
  for (int round = 0; round < 80; ++round) {
    auto seq = random_sequence(g, pool, 1 + static_cast<int>(g() % 3), 3);
    auto family = as_set(update_answer_sets(seq));
    InheritanceProgram ip = to_inheritance(seq);
    detail::each_consistent(seq.atoms(), [&](const Interpretation& s) {
      REQUIRE(is_inh_answer_set(ip, s) == (family.count(s) != 0));
      if (family.count(s) == 0) return;
      // Inside the family every rejection has an overriding counterpart.
      for (const auto& name : rej(seq, s).total()) {
        const Rule* dropped = find_rule(seq, name);
        REQUIRE(dropped != nullptr);
        bool covered = false;
        for (int a = name.layer; a < seq.size() && !covered; ++a)
          for (const auto& r1 : seq.programs[a].rules)
            if (!r1.is_constraint() &&
                overrides(ip, s, a, r1, name.layer - 1, *dropped)) {
              covered = true;
              break;
            }
        REQUIRE(covered);
      }
    });
  }
}

TEST_CASE("a head standing in the model does not excuse a false body") {
  auto seq = make_sequence(
      {parse_program("a :- -a. -a. -c :- -a."),
       parse_program("-b :- b, not -b. -c :- not b, not -b. b :- -b, c."),
       parse_program("-a :- not -a, not b.")});
  // The last rule's head holds here while its body fails; the first
  // program's top rule therefore survives and poisons the candidate.
  Interpretation s = interp({sneg("a"), sneg("c")});
  REQUIRE_FALSE(is_inh_answer_set(to_inheritance(seq), s));
  REQUIRE(update_answer_sets(seq).empty());
  REQUIRE(inh_answer_sets(to_inheritance(seq)).empty());
}

TEST_CASE("stagewise rejection looks only at the consulted window") {
  auto seq = tv_sequence(3);
  Interpretation t = interp(
      {sneg("power_failure"), pos("tv_on"), pos("watch_tv"), pos("night")});
  REQUIRE(rejected_between(seq, t, 2, 3) == std::set<RuleName>{{2, 1}});
  REQUIRE(rejected_between(seq, t, 2, 2).empty());
  // The layer-two rule threatening tv_on has a false body under t.
  REQUIRE(rejected_between(seq, t, 1, 3).empty());
}

TEST_CASE("stagewise semantics matches the update semantics on fixtures") {
  auto tv2 = tv_sequence(2);
  REQUIRE(justified_updates(tv2, 2) == update_answer_sets(tv2));
  REQUIRE(as_set(justified_updates(tv2, 1)) ==
          std::set<Interpretation>{
              interp({pos("night"), pos("tv_on"), pos("watch_tv")})});

  auto tv3 = tv_sequence(3);
  REQUIRE(justified_updates(tv3, 3) == update_answer_sets(tv3));
}

TEST_CASE("an unsatisfiable earlier stage blocks stagewise acceptance") {
  auto seq = make_sequence({parse_program("a :- not a."),
                            parse_program("a.")});
  auto upd = update_answer_sets(seq);
  REQUIRE(as_set(upd) == std::set<Interpretation>{interp({pos("a")})});
  REQUIRE(justified_updates(seq, 2).empty());
  REQUIRE(justified_updates(seq, 1).empty());
}

TEST_CASE("stagewise acceptance at the final state implies update membership") {
  std::mt19937 g(7881);
  std::vector<std::string> pool{"a", "b", "c"};
  for (int round = 0; round < 80; ++round) {
    int n = 1 + static_cast<int>(g() % 3);
    auto seq = random_sequence(g, pool, n, 3);
    auto family = as_set(update_answer_sets(seq));
    for (const auto& s : justified_updates(seq, n))
      REQUIRE(family.count(s) == 1);
  }
}

TEST_CASE("stagewise acceptance is update membership plus viable stages") {
  std::mt19937 g(515);
  std::vector<std::string> pool{"a", "b", "c"};
  int equal_rounds = 0;
  for (int round = 0; round < 120; ++round) {
    int n = 1 + static_cast<int>(g() % 3);
    auto seq = random_sequence(g, pool, n, 3, true);
    auto upd = as_set(update_answer_sets(seq));
    auto just = as_set(justified_updates(seq, n));
    for (const auto& s : just) REQUIRE(upd.count(s) == 1);
    for (const auto& s : upd) {
      bool stages_ok = true;
      for (int l = 1; l < n && stages_ok; ++l)
        stages_ok = !answer_sets(justified_residue(seq, s, l, n)).empty();
      // Acceptance at the last state is exactly: the unfounded-rejection
      // residue admits s, and every earlier stage stays satisfiable.
      bool residue_ok = check_declarative(seq, s, RejectionVariant::Weak);
      REQUIRE((just.count(s) == 1) == (residue_ok && stages_ok));
    }
    if (!upd.empty() && upd == just) ++equal_rounds;
  }
  REQUIRE(equal_rounds >= 30);
}

TEST_CASE("future knowledge can strand an intermediate stage") {
  auto seq = make_sequence(
      {parse_program("-a. a :- c."),
       parse_program("c :- b. a :- not c. -a :- b."),
       parse_program("c :- b, not a. -c :- not b, not c. b.")});
  Interpretation s = interp({sneg("a"), pos("b"), pos("c")});
  REQUIRE(as_set(update_answer_sets(seq)) == std::set<Interpretation>{s});
  // Every shorter sequence is satisfiable on its own terms.
  for (int j = 1; j <= 3; ++j)
    REQUIRE_FALSE(update_answer_sets(prefix_of(seq, j)).empty());
  // Yet under the final state's rejections stage two is stranded: the
  // displaced "a :- c" was the only escape from the a / -a deadlock there.
  REQUIRE(answer_sets(justified_residue(seq, s, 2, 3)).empty());
  REQUIRE(justified_updates(seq, 3).empty());
}

TEST_CASE("unfounded rejection can starve a self-supporting conclusion") {
  auto seq = make_sequence({parse_program("a :- not c."),
                            parse_program("-a."),
                            parse_program("a :- a.")});
  Interpretation keep_a = interp({pos("a")});
  Interpretation drop_a = interp({sneg("a")});
  REQUIRE(as_set(update_answer_sets(seq)) ==
          std::set<Interpretation>{keep_a, drop_a});
  REQUIRE(check_declarative(seq, keep_a, RejectionVariant::Founded));
  // Unfounded rejection also discards the displaced first rule, leaving
  // only "a :- a", which cannot stand on its own.
  REQUIRE_FALSE(check_declarative(seq, keep_a, RejectionVariant::Weak));
  // The stagewise semantics inherits that blind spot.
  REQUIRE(as_set(justified_updates(seq, 3)) ==
          std::set<Interpretation>{drop_a});
}

TEST_CASE("a state index only sees the sequence up to that point") {
  std::mt19937 g(2750);
  std::vector<std::string> pool{"a", "b"};
  for (int round = 0; round < 40; ++round) {
    int n = 2 + static_cast<int>(g() % 2);
    auto seq = random_sequence(g, pool, n, 2);
    for (int j = 1; j <= n; ++j)
      REQUIRE(justified_updates(seq, j) ==
              justified_updates(prefix_of(seq, j), j));
  }
}

TEST_CASE("state indices outside the sequence are rejected") {
  auto seq = tv_sequence(2);
  REQUIRE_THROWS_AS(is_justified_update(seq, interp({}), 0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(is_justified_update(seq, interp({}), 3),
                    std::invalid_argument);
}

TEST_CASE("alternative semantics respect the capacity bound") {
  auto seq = make_sequence({parse_program("a. b. c. d. e.")});
  REQUIRE_THROWS_AS(inh_answer_sets(to_inheritance(seq), 4), CapacityError);
  REQUIRE_THROWS_AS(justified_updates(seq, 1, 4), CapacityError);
}
