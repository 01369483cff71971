#include <functional>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace liealg;
using namespace testing_support;

namespace {

const std::vector<CorpusItem>& shared_corpus() {
  static const std::vector<CorpusItem> c = corpus();
  return c;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInstance;
}

bool same_module(const OrdinaryModule& a, const OrdinaryModule& b) {
  if (!(a.algebra() == b.algebra()) || a.vdim() != b.vdim()) return false;
  for (std::size_t k = 0; k < a.s(); ++k)
    for (std::size_t i = 0; i < a.n(); ++i)
      if (a.F(k, i) != b.F(k, i) || a.G(k, i) != b.G(k, i)) return false;
  return true;
}

const char* kLeib2Sparse = R"({
  "algebra": {"dim": 2, "s": 1, "c": [[[null, null], [null, ["1", "0"]]]]},
  "module": {"vdim": 2,
             "F": [[null, [["0", "-1"], ["0", "0"]]]],
             "G": [[null, [["0", "1"], ["0", "0"]]]]}
})";

}  // namespace

TEST(Io, ScalarsAreCanonicalStrings) {
  EXPECT_EQ(scalar_to_json(q(-4, 6)), "-2/3");
  EXPECT_EQ(scalar_from_json(json("6/4")), q(3, 2));
  EXPECT_EQ(kind_of([] { scalar_from_json(json("1/0")); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { scalar_from_json(json("abc")); }), ErrorKind::Parse);
}

TEST(Io, SparseInstanceParses) {
  const Instance inst = instance_from_json(parse_json_text(kLeib2Sparse));
  EXPECT_EQ(inst.algebra, leib2());
  ASSERT_TRUE(inst.module);
  EXPECT_TRUE(same_module(*inst.module, adjoint(leib2())));
  EXPECT_TRUE(inst.metadata.is_null());
}

TEST(Io, BareAlgebraObject) {
  const Instance inst = instance_from_json(parse_json_text(R"({"dim": 3, "s": 2})"));
  EXPECT_EQ(inst.algebra, LieLikeAlgebra(3, 2));
  EXPECT_FALSE(inst.module);
}

TEST(Io, MalformedInput) {
  EXPECT_EQ(kind_of([] { parse_json_text(R"({"algebra": {"dim": 2,)"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { instance_from_json(parse_json_text("[1, 2]")); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { read_instance_file("/nonexistent/instance.json"); }), ErrorKind::Parse);
  // wrong vector length inside c
  EXPECT_EQ(kind_of([] { instance_from_json(parse_json_text(R"({"dim": 2, "s": 1, "c": [[[["1"]]]]})")); }),
            ErrorKind::Parse);
}

TEST(Io, RoundTrips) {
  for (const auto& item : shared_corpus()) {
    const json j = instance_to_json(item.instance);
    const Instance back = instance_from_json(parse_json_text(dump(j)));
    ASSERT_EQ(back.algebra, item.instance.algebra);
    ASSERT_TRUE(same_module(*back.module, *item.instance.module));
    ASSERT_EQ(back.metadata, item.instance.metadata);
    ASSERT_EQ(dump(instance_to_json(back)), dump(j));

    const auto r = solve(item.instance.algebra, *item.instance.module);
    const SolveResult rb = result_from_json(parse_json_text(dump(result_to_json(r))), r.weight.s(), r.weight.n());
    ASSERT_EQ(rb.v, r.v);
    ASSERT_EQ(rb.weight, r.weight);
    ASSERT_EQ(rb.dichotomy, r.dichotomy);
    ASSERT_EQ(rb.branch_trace, r.branch_trace);
  }
}

TEST(Io, ResultSchema) {
  const auto r = solve(leib2(), adjoint(leib2()));
  const json j = result_to_json(r);
  EXPECT_EQ(j["v"], json::parse(R"(["1", "0"])"));
  EXPECT_EQ(j["phi"], json::parse(R"([["0", "0"]])"));
  EXPECT_EQ(j["psi"], json::parse(R"([["0", "0"]])"));
  EXPECT_EQ(j["dichotomy"], "both");
  EXPECT_EQ(j["branch_trace"], json::parse(R"(["case-2", "ann-nonzero/g-zero"])"));
}

TEST(Generator, Abelian) {
  const Instance inst = generate({Construction::Abelian, 3, 2, 99, 2});
  EXPECT_EQ(inst.algebra, LieLikeAlgebra(3, 2));
  EXPECT_EQ(is_solvable(inst.algebra).depth, 2u);
}

TEST(Generator, GradedNilpotentDim3) {
  const Instance inst = generate({Construction::GradedNilpotent, 3, 2, 1, 1});
  const auto& L = inst.algebra;
  EXPECT_TRUE(check_algebra(L).empty());
  EXPECT_TRUE(is_solvable(L).solvable);
  // V1 = first two coordinates, V2 = e3: only <e3, e3>_k may be nonzero, and it lies in V1
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const Vector& c = L.structure(k, i, j);
        if (i < 2 || j < 2) {
          EXPECT_TRUE(is_zero(c));
        }
        EXPECT_TRUE(is_zero(c[2]));
      }
}

TEST(Generator, ScaledBundleIsTrivial) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = generate({Construction::ScaledLeibnizBundle, 2, 2, seed, 2});
    ASSERT_TRUE(is_trivial(inst.algebra));
    ASSERT_TRUE(check_algebra(inst.algebra).empty());
  }
}

TEST(Generator, DirectSumIsNonTrivialForSomeSeed) {
  bool non_trivial = false;
  for (std::uint64_t seed = 1; seed <= 10 && !non_trivial; ++seed)
    non_trivial = !is_trivial(generate({Construction::DirectSum, 4, 2, seed, 2}).algebra);
  EXPECT_TRUE(non_trivial);
}

TEST(Generator, SeedDeterminism) {
  for (const auto& item : shared_corpus()) {
    const std::string a = dump(instance_to_json(item.instance));
    const std::string b = dump(instance_to_json(generate(item.spec)));
    ASSERT_EQ(a, b);
  }
  // different seeds differ somewhere
  EXPECT_NE(dump(instance_to_json(generate({Construction::GradedNilpotent, 4, 2, 1, 2}))),
            dump(instance_to_json(generate({Construction::GradedNilpotent, 4, 2, 2, 2}))));
}

TEST(Generator, MetadataRecordsSpec) {
  const GeneratorSpec spec{Construction::BasisChanged, 3, 2, 7, 2};
  const Instance inst = generate(spec);
  EXPECT_EQ(inst.metadata, spec_to_json(spec));
  EXPECT_EQ(construction_from_string("basis-changed"), Construction::BasisChanged);
  EXPECT_FALSE(construction_from_string("bogus"));
}

TEST(Generator, RejectsBadSpec) {
  EXPECT_EQ(kind_of([] { generate({Construction::Abelian, 2, 0, 1, 2}); }), ErrorKind::InvalidInstance);
  EXPECT_EQ(kind_of([] { generate({Construction::Abelian, 2, 1, 1, 0}); }), ErrorKind::InvalidInstance);
}

TEST(RunVerify, Leib2) {
  Instance inst{leib2(), adjoint(leib2()), json()};
  const auto rep = run_verify(inst);
  EXPECT_EQ(rep.exit_code, 0);
  ASSERT_TRUE(rep.result);
  EXPECT_EQ(rep.result->dichotomy, Dichotomy::Both);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name;
}

TEST(RunVerify, PerturbedModuleExitsOne) {
  auto M = adjoint(leib2());
  Matrix G = M.G(0, 1);
  G(1, 1) += 1;
  M.set_G(0, 1, G);
  const auto rep = run_verify({leib2(), M, json()});
  EXPECT_EQ(rep.exit_code, 1);
  ASSERT_GE(rep.checks.size(), 2u);
  EXPECT_EQ(rep.checks[1].name, "module");
  EXPECT_FALSE(rep.checks[1].passed);
  bool product = false;
  for (const auto& v : check_module(M))
    product = product || (v.axiom == ModuleViolation::Axiom::GProduct && v.i == 1 && v.j == 1);
  EXPECT_TRUE(product);
}

TEST(RunVerify, NonSplitExitsTwo) {
  LieLikeAlgebra L(1, 1);
  OrdinaryModule M(L, 2);
  M.set_F(0, 0, mat({{0, -1}, {1, 0}}));
  EXPECT_EQ(run_verify({L, M, json()}).exit_code, 2);
}

TEST(RunVerify, MissingModuleExitsTwo) { EXPECT_EQ(run_verify({leib2(), std::nullopt, json()}).exit_code, 2); }

TEST(RunVerify, WholeCorpusPasses) {
  for (const auto& item : shared_corpus()) {
    const auto rep = run_verify(item.instance);
    ASSERT_EQ(rep.exit_code, 0) << report_to_json(rep).dump();
  }
}
