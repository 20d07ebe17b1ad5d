#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "updlp/dynlp.hpp"
#include "updlp/parser.hpp"
#include "updlp/update.hpp"

using namespace updlp;

namespace {

UpdateSequence glp_seq(std::vector<std::string> texts) {
  std::vector<Program> ps;
  for (const auto& t : texts) ps.push_back(parse_program(t, Mode::Glp));
  return make_sequence(std::move(ps), Mode::Glp);
}

UpdateSequence elp_seq(std::vector<std::string> texts) {
  std::vector<Program> ps;
  for (const auto& t : texts) ps.push_back(parse_program(t));
  return make_sequence(std::move(ps));
}

std::set<Interpretation> as_set(const AnswerSetList& l) {
  return std::set<Interpretation>(l.begin(), l.end());
}

GeneralizedInterpretation gi_of(std::set<std::string> pos_atoms,
                                std::set<std::string> universe) {
  GeneralizedInterpretation i;
  i.pos = std::move(pos_atoms);
  i.universe = std::move(universe);
  return i;
}

Interpretation total_view(const GeneralizedInterpretation& i) {
  Interpretation s;
  for (const auto& a : i.universe)
    s.lits.insert(i.holds(a) ? pos(a) : sneg(a));
  return s;
}

Program random_glp_layer(std::mt19937& g, const std::vector<std::string>& pool,
                         int max_rules) {
  auto rnd = [&](int n) { return n ? static_cast<int>(g() % n) : 0; };
  Program p;
  p.mode = Mode::Glp;
  int n = 1 + rnd(max_rules);
  for (int i = 0; i < n; ++i) {
    Rule r;
    const std::string& a = pool[rnd(static_cast<int>(pool.size()))];
    r.head = rnd(100) < 35 ? not_head(a) : lit_head(pos(a));
    int body = rnd(3);
    for (int k = 0; k < body; ++k) {
      Literal l = pos(pool[rnd(static_cast<int>(pool.size()))]);
      if (rnd(2))
        r.body_pos.insert(l);
      else
        r.body_wneg.insert(l);
    }
    p.rules.push_back(std::move(r));
  }
  return p;
}

UpdateSequence random_glp_sequence(std::mt19937& g,
                                   const std::vector<std::string>& pool,
                                   int layers, int max_rules) {
  std::vector<Program> ps;
  for (int i = 0; i < layers; ++i)
    ps.push_back(random_glp_layer(g, pool, max_rules));
  return make_sequence(std::move(ps), Mode::Glp);
}

Program random_elp_layer(std::mt19937& g, const std::vector<std::string>& pool,
                         int max_rules) {
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
      if (rnd(100) < 40) l = l.complement();
      if (rnd(2))
        r.body_pos.insert(l);
      else
        r.body_wneg.insert(l);
    }
    p.rules.push_back(std::move(r));
  }
  return p;
}

}  // namespace

TEST_CASE("a self-supported weak head is not dynamically stable") {
  auto seq = glp_seq({"it_is_raining.",
                      "not it_is_raining :- not it_is_raining."});
  auto models = dynamic_stable_models(seq);
  REQUIRE(models.size() == 1);
  REQUIRE(models[0].pos == std::set<std::string>{"it_is_raining"});

  // The flattened translation accepts both outcomes; the dynamic semantics
  // keeps only the inertial one.
  auto translated = update_answer_sets(q_translate(seq));
  REQUIRE(as_set(translated) ==
          std::set<Interpretation>{interp({pos("it_is_raining")}),
                                   interp({sneg("it_is_raining")})});
}

TEST_CASE("the same divergence shows up for the strongly negated variant") {
  auto seq = elp_seq({"it_is_raining.",
                      "-it_is_raining :- not it_is_raining."});
  auto dyn = dynamic_answer_sets(seq);
  REQUIRE(as_set(dyn) == std::set<Interpretation>{interp({pos("it_is_raining")})});
  auto upd = update_answer_sets(seq);
  REQUIRE(as_set(upd) ==
          std::set<Interpretation>{interp({pos("it_is_raining")}),
                                   interp({sneg("it_is_raining")})});
}

TEST_CASE("weak-head tv sequence keeps the set switched on") {
  auto seq = glp_seq(
      {"sleep :- not tv_on. tv_on. watch_tv :- tv_on.",
       "not tv_on :- power_failure. power_failure.",
       "not power_failure."});
  auto models = dynamic_stable_models(seq);
  REQUIRE(models.size() == 1);
  REQUIRE(models[0].pos == std::set<std::string>({"tv_on", "watch_tv"}));

  // The closing defaults are rules like any other: once an atom goes
  // false they displace its earlier support, so the flattening keeps
  // three displacement families beyond the inertial one.
  Interpretation keep = interp(
      {sneg("power_failure"), pos("tv_on"), pos("watch_tv"), sneg("sleep")});
  auto translated = update_answer_sets(q_translate(seq));
  REQUIRE(as_set(translated) ==
          std::set<Interpretation>{
              keep,
              interp({sneg("power_failure"), sneg("tv_on"), pos("sleep"),
                      sneg("watch_tv")}),
              interp({sneg("power_failure"), sneg("tv_on"), sneg("sleep"),
                      sneg("watch_tv")}),
              interp({sneg("power_failure"), pos("tv_on"), sneg("watch_tv"),
                      sneg("sleep")})});
  REQUIRE(total_view(models[0]) == keep);
}

TEST_CASE("a weak head justified by an unchallenged default is stable") {
  auto seq = glp_seq({"it_is_raining. it_is_cloudy :- it_is_raining.",
                      "not it_is_raining :- not it_is_cloudy."});
  auto models = dynamic_stable_models(seq);
  REQUIRE(models.size() == 2);
  REQUIRE(models[0].pos.empty());
  REQUIRE(models[1].pos ==
          std::set<std::string>({"it_is_cloudy", "it_is_raining"}));

  auto translated = update_answer_sets(q_translate(seq));
  REQUIRE(as_set(translated) ==
          std::set<Interpretation>{
              interp({pos("it_is_raining"), pos("it_is_cloudy")}),
              interp({sneg("it_is_raining"), sneg("it_is_cloudy")})});
}

TEST_CASE("rejection flips heads only forward in time") {
  auto seq = glp_seq({"a.", "not a."});
  auto universe = seq.atoms();
  REQUIRE(dyn_rejected(seq, gi_of({}, universe)) ==
          std::set<RuleName>{{1, 0}});
  // With a present, the later weak rule still applies and wins.
  REQUIRE(dyn_rejected(seq, gi_of({"a"}, universe)) ==
          std::set<RuleName>{{1, 0}});
  auto rev = glp_seq({"not a.", "a."});
  REQUIRE(dyn_rejected(rev, gi_of({"a"}, universe)) ==
          std::set<RuleName>{{1, 0}});
}

TEST_CASE("default falsity covers atoms with no applying rule") {
  auto seq = glp_seq({"a. b :- c."});
  auto universe = seq.atoms();
  REQUIRE(dyn_defaults(seq, gi_of({"a"}, universe)) ==
          std::set<std::string>({"b", "c"}));
  // Under an interpretation holding c, the rule for b applies.
  REQUIRE(dyn_defaults(seq, gi_of({"a", "c"}, universe)) ==
          std::set<std::string>{"c"});
}

TEST_CASE("stability checks demand a covering universe and weak-head input") {
  auto seq = glp_seq({"a."});
  REQUIRE_THROWS_AS(is_dynamic_stable(seq, gi_of({}, {})),
                    std::invalid_argument);
  auto elp = elp_seq({"a."});
  REQUIRE_THROWS_AS(dynamic_stable_models(elp), std::invalid_argument);
  REQUIRE_THROWS_AS(q_translate(elp), std::invalid_argument);
}

TEST_CASE("the compiled form reproduces the enumerated stable models") {
  std::mt19937 g(424242);
  std::vector<std::string> pool{"a", "b", "c"};
  for (int round = 0; round < 120; ++round) {
    auto seq = random_glp_sequence(g, pool, 1 + static_cast<int>(g() % 3), 3);
    REQUIRE(dynamic_program_stable_models(seq) == dynamic_stable_models(seq));
  }
}

TEST_CASE("the closed translation is total over the base alphabet") {
  std::mt19937 g(5150);
  std::vector<std::string> pool{"a", "b", "c"};
  for (int round = 0; round < 60; ++round) {
    auto seq = random_glp_sequence(g, pool, 1 + static_cast<int>(g() % 2), 3);
    auto elp = q_translate(seq);
    REQUIRE(elp.mode == Mode::Elp);
    for (const auto& s : update_answer_sets(elp))
      for (const auto& a : seq.atoms())
        REQUIRE((s.contains(pos(a)) || s.contains(sneg(a))));
  }
}

TEST_CASE("every dynamic stable model survives the flattening") {
  std::mt19937 g(1999);
  std::vector<std::string> pool{"a", "b", "c"};
  for (int round = 0; round < 80; ++round) {
    auto seq = random_glp_sequence(g, pool, 1 + static_cast<int>(g() % 3), 3);
    auto family = as_set(update_answer_sets(q_translate(seq)));
    for (const auto& m : dynamic_stable_models(seq))
      REQUIRE(family.count(total_view(m)) == 1);
  }
}

TEST_CASE("dynamic answer sets usually, but not always, pass the update test") {
  std::mt19937 g(76);
  std::vector<std::string> pool{"a", "b", "c"};
  int contained = 0;
  for (int round = 0; round < 80; ++round) {
    std::vector<Program> ps;
    int n = 1 + static_cast<int>(g() % 3);
    for (int i = 0; i < n; ++i) ps.push_back(random_elp_layer(g, pool, 3));
    auto seq = make_sequence(std::move(ps));
    auto glp = embed_sequence(seq);
    auto flat = as_set(update_answer_sets(q_translate(glp)));
    auto family = as_set(update_answer_sets(seq));
    bool sub = true;
    for (const auto& s : dynamic_answer_sets(seq)) {
      // Over the embedded alphabet the flattening always keeps the model.
      REQUIRE(flat.count(total_view(totalize(s, glp.atoms()))) == 1);
      if (family.count(s) == 0) sub = false;
    }
    if (sub) ++contained;
  }
  // The two-way closing rules sit in the final program, so they can push a
  // conflict past its original position; containment is only typical.
  REQUIRE(contained >= 70);
}

TEST_CASE("closing rules can revive an overwritten complement") {
  auto seq = elp_seq({"-a.", "a.", "b."});
  // In the update reading the newer fact displaces the older complement.
  REQUIRE(as_set(update_answer_sets(seq)) ==
          std::set<Interpretation>{interp({pos("a"), pos("b")})});
  // The embedded closing rules land in the last program, later than the
  // fact they topple: the old complement survives as a second model.
  REQUIRE(as_set(dynamic_answer_sets(seq)) ==
          std::set<Interpretation>{interp({pos("a"), pos("b")}),
                                   interp({sneg("a"), pos("b")})});
}

TEST_CASE("embedding spells strong negation as fresh atoms") {
  auto seq = elp_seq({"a. -b :- a, not c."});
  auto glp = embed_sequence(seq);
  REQUIRE(glp.mode == Mode::Glp);
  const Program& p = glp.programs[0];
  REQUIRE(p.rules[1].head.lit == pos("nn_b"));
  REQUIRE(p.rules[1].body_pos == std::set<Literal>{pos("a")});
  REQUIRE(p.rules[1].body_wneg == std::set<Literal>{pos("c")});
  // The final update excludes complements in both directions.
  const Program& last = glp.programs.back();
  int weak_heads = 0;
  for (const auto& r : last.rules)
    if (r.head.kind == HeadKind::NotAtom) ++weak_heads;
  REQUIRE(weak_heads == 2 * 3);

  REQUIRE_THROWS_AS(embed_sequence(elp_seq({":- a."})), std::invalid_argument);
}

TEST_CASE("totalization embeds literals and keeps the rest weakly false") {
  auto u = std::set<std::string>{"a", "b", "nn_a", "nn_b"};
  auto gi = totalize(interp({pos("a"), sneg("b")}), u);
  REQUIRE(gi.pos == std::set<std::string>({"a", "nn_b"}));
  REQUIRE(gi.holds_not("b"));
  REQUIRE(gi.holds_not("nn_a"));
}

TEST_CASE("the dependency graph wires rules to bodies and atoms to heads") {
  auto seq = glp_seq({"a :- b, not c. not c."});
  AndOrGraph g = build_andor_graph(seq);
  REQUIRE(g.has_node(rule_node({1, 0})));
  REQUIRE(g.has_node(atom_node("a")));
  REQUIRE(g.has_node(atom_node("b")));
  REQUIRE(g.has_node(weak_node("c")));

  const auto* rc = g.connector(rule_node({1, 0}));
  REQUIRE(rc != nullptr);
  REQUIRE(rc->size() == 2);

  const auto* ac = g.connector(atom_node("a"));
  REQUIRE(ac != nullptr);
  REQUIRE(*ac == std::vector<GraphNode>{rule_node({1, 0})});

  // b has no rules: an always-present, empty connector.
  const auto* bc = g.connector(atom_node("b"));
  REQUIRE(bc != nullptr);
  REQUIRE(bc->empty());

  const auto* wc = g.connector(weak_node("c"));
  REQUIRE(wc != nullptr);
  REQUIRE(*wc == std::vector<GraphNode>{rule_node({1, 1})});

  REQUIRE(to_string(weak_node("c")) == "not c");
  REQUIRE(to_string(atom_node("c")) == "c");
}

TEST_CASE("bottom-up solvability distinguishes grounded from circular nodes") {
  auto seq = glp_seq({"a :- b. b. c :- c."});
  AndOrGraph g = build_andor_graph(seq);
  REQUIRE(acyclic_path_from(g, atom_node("a")));
  REQUIRE(acyclic_path_from(g, atom_node("b")));
  REQUIRE_FALSE(acyclic_path_from(g, atom_node("c")));
  REQUIRE_THROWS_AS(acyclic_path_from(g, atom_node("zzz")),
                    std::invalid_argument);
}

TEST_CASE("the static certificate flags weak self-support") {
  auto cyclic = glp_seq({"it_is_raining.",
                         "not it_is_raining :- not it_is_raining."});
  REQUIRE_FALSE(cycle_certificate(build_andor_graph(cyclic)));

  auto clean = glp_seq(
      {"sleep :- not tv_on. tv_on. watch_tv :- tv_on.",
       "not tv_on :- power_failure. power_failure.",
       "not power_failure."});
  REQUIRE(cycle_certificate(build_andor_graph(clean)));
}

TEST_CASE("graph and fixpoint stability verdicts always agree") {
  std::mt19937 g(31337);
  std::vector<std::string> pool{"a", "b", "c"};
  int certified = 0;
  for (int round = 0; round < 150; ++round) {
    auto seq = random_glp_sequence(g, pool, 1 + static_cast<int>(g() % 3), 3);
    auto report = coincidence_check(seq);
    REQUIRE(report.all_agree());
    // Records passing the fixpoint test are exactly the stable models,
    // certificate or not; the flattening may keep extra unstable families.
    std::size_t stable = 0;
    for (const auto& rec : report.records)
      if (rec.fixpoint_verdict) ++stable;
    REQUIRE(stable == dynamic_stable_models(seq).size());
    if (report.certificate) ++certified;
  }
  REQUIRE(certified > 0);
}

TEST_CASE("the certificate does not rule out displacement artifacts") {
  auto seq = glp_seq({"a.", "b."});
  auto report = coincidence_check(seq);
  REQUIRE(report.certificate);
  // The closing default for a displaces the old fact without any cycle:
  // two flattened families survive, only one of them stable.
  REQUIRE(report.records.size() == 2);
  REQUIRE(dynamic_stable_models(seq).size() == 1);
  std::size_t stable = 0;
  for (const auto& rec : report.records) {
    REQUIRE(rec.graph_verdict == rec.fixpoint_verdict);
    if (rec.fixpoint_verdict) ++stable;
  }
  REQUIRE(stable == 1);
}

TEST_CASE("the strongly negated variant gets the same graph treatment") {
  std::mt19937 g(808);
  std::vector<std::string> pool{"a", "b"};
  int certified = 0;
  for (int round = 0; round < 100; ++round) {
    std::vector<Program> ps;
    int n = 1 + static_cast<int>(g() % 2);
    for (int i = 0; i < n; ++i) ps.push_back(random_elp_layer(g, pool, 3));
    auto seq = make_sequence(std::move(ps));
    auto report = coincidence_check_elp(seq);
    REQUIRE(report.all_agree());
    if (report.certificate) ++certified;
    // Records that pass the fixpoint test are exactly the sets both
    // semantics accept.
    std::size_t stable = 0;
    for (const auto& rec : report.records)
      if (rec.fixpoint_verdict) ++stable;
    auto upd = as_set(update_answer_sets(seq));
    std::size_t overlap = 0;
    for (const auto& s : dynamic_answer_sets(seq))
      if (upd.count(s)) ++overlap;
    REQUIRE(stable == overlap);
  }
  REQUIRE(certified > 0);
}

TEST_CASE("positive support must survive displacement too") {
  auto seq = glp_seq({"a. b :- a.", "not a :- b.", "a :- b."});
  auto report = coincidence_check(seq);
  bool saw = false;
  for (const auto& rec : report.records)
    if (rec.answer_set.contains(pos("a")) &&
        rec.answer_set.contains(pos("b"))) {
      saw = true;
      // Unfounded displacement strips the fact; the two surviving positive
      // rules only support each other, so the set is not stable.
      REQUIRE_FALSE(rec.fixpoint_verdict);
      REQUIRE_FALSE(rec.graph_verdict);
      REQUIRE(rec.note == "no acyclic support for a");
    }
  REQUIRE(saw);
}

TEST_CASE("a stray derivation on the displaced side blocks stability") {
  auto seq = glp_seq({"a :- not c. not a :- not c.", "b."});
  auto report = coincidence_check(seq);
  REQUIRE(report.records.size() == 1);
  const auto& rec = report.records[0];
  // Twin rules inside one program never reject each other: both fire, the
  // closure carries a alongside not a, and the candidate fails.
  REQUIRE_FALSE(rec.fixpoint_verdict);
  REQUIRE_FALSE(rec.graph_verdict);
  REQUIRE(rec.note == "displaced conclusion a stays derivable");
}

TEST_CASE("records carry a note when weak support is circular") {
  auto seq = glp_seq({"it_is_raining.",
                      "not it_is_raining :- not it_is_raining."});
  auto report = coincidence_check(seq);
  REQUIRE(report.records.size() == 2);
  bool saw_note = false;
  for (const auto& rec : report.records)
    if (!rec.graph_verdict) {
      REQUIRE(rec.note.find("it_is_raining") != std::string::npos);
      saw_note = true;
    }
  REQUIRE(saw_note);
}
