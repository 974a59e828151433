#include <gtest/gtest.h>

#include "chromllt/chromatic.hpp"

using namespace chromllt;

namespace {

const RationalFunction t = RationalFunction::t();

DyckGraph dyck(std::vector<int> h) { return DyckGraph(std::move(h)); }
PackedWord pw(const std::string& s) { return PackedWord(parse_word(s)); }
Permutation perm(const std::string& s) { return Permutation(parse_word(s)); }

// The graphs on at most three vertices, by Hessenberg function.
const DyckGraph g1 = dyck({1});
const DyckGraph g2_empty = dyck({1, 2});
const DyckGraph g2_edge = dyck({2, 2});
const DyckGraph g3_empty = dyck({1, 2, 3});
const DyckGraph g3_edge12 = dyck({2, 2, 3});
const DyckGraph g3_edge23 = dyck({1, 3, 3});
const DyckGraph g3_path = dyck({2, 3, 3});
const DyckGraph g3_complete = dyck({3, 3, 3});

// sum of t^{power} B_key.
LinearCombination expand(Basis b, std::initializer_list<std::pair<int, const char*>> terms) {
    LinearCombination x(b);
    for (auto [power, key] : terms) x.add_term(parse_word(key), t_pow(power));
    return x;
}

LinearCombination phi_to_f(const LinearCombination& x) {
    LinearCombination out(Basis::QSymF);
    for (const auto& [key, c] : x) out.add_term(evaluation(WordView(key)).parts(), c);
    return out;
}

}  // namespace

TEST(Chromatic, SmallExpansions) {
    EXPECT_EQ(x_wqsym(g1), M(pw("1")));
    EXPECT_EQ(x_wqsym(g2_empty), expand(Basis::WQSymM, {{0, "11"}, {0, "12"}, {0, "21"}}));
    EXPECT_EQ(x_wqsym(g2_edge), expand(Basis::WQSymM, {{1, "12"}, {0, "21"}}));
    LinearCombination all(Basis::WQSymM);
    for (auto& w : packed_words(3)) all.add_term(w.letters(), 1);
    EXPECT_EQ(x_wqsym(g3_empty), all);
    EXPECT_EQ(x_wqsym(g3_edge12), expand(Basis::WQSymM, {{1, "121"}, {1, "122"}, {1, "123"}, {1, "132"}, {0, "211"},
                                                         {0, "212"}, {0, "213"}, {1, "231"}, {0, "312"}, {0, "321"}}));
    EXPECT_EQ(x_wqsym(g3_edge23), expand(Basis::WQSymM, {{1, "112"}, {0, "121"}, {1, "123"}, {0, "132"}, {1, "212"},
                                                         {1, "213"}, {0, "221"}, {0, "231"}, {1, "312"}, {0, "321"}}));
    EXPECT_EQ(x_wqsym(g3_path), expand(Basis::WQSymM, {{1, "121"}, {2, "123"}, {1, "132"}, {1, "212"}, {1, "213"},
                                                       {1, "231"}, {1, "312"}, {0, "321"}}));
    EXPECT_EQ(x_wqsym(g3_complete), expand(Basis::WQSymM, {{3, "123"}, {2, "132"}, {2, "213"}, {1, "231"}, {1, "312"},
                                                           {0, "321"}}));
    EXPECT_EQ(x_wqsym(Graph(0)), LinearCombination::one(Basis::WQSymM));
}

TEST(Chromatic, Llt) {
    EXPECT_EQ(llt_wqsym(g2_edge), expand(Basis::WQSymM, {{0, "11"}, {1, "12"}, {0, "21"}}));
    for (int n = 0; n <= 5; ++n) {
        LinearCombination all(Basis::WQSymM);
        for (auto& u : packed_words(n)) all.add_term(u.letters(), 1);
        for (auto& g : enumerate_dyck(n)) {
            EXPECT_EQ(evaluate_at(llt_wqsym(g), 1), all);
            EXPECT_EQ(wqsym_to_qsym(llt_wqsym(g)), llt_qsym(g));
            EXPECT_EQ(wqsym_to_qsym(x_wqsym(g)), x_qsym(g));
            for (const auto& [k, c] : llt_wqsym(g)) ASSERT_TRUE(c.is_monomial());
        }
    }
}

TEST(Chromatic, EdgelessAtOneIsPowerOfM1) {
    for (int n = 0; n <= 5; ++n) {
        LinearCombination power = LinearCombination::one(Basis::QSymM);
        for (int k = 0; k < n; ++k) power = multiply(power, QM(Composition{1}));
        EXPECT_EQ(evaluate_at(x_qsym(DyckGraph::edgeless(n)), 1), power);
    }
}

TEST(Chromatic, Symmetry) {
    for (int n = 0; n <= 5; ++n) {
        for (auto& g : enumerate_dyck(n)) {
            EXPECT_TRUE(is_symmetric(x_qsym(g))) << g;
            EXPECT_TRUE(is_symmetric(llt_qsym(g))) << g;
        }
    }
    // Not every graph gives a symmetric function.
    EXPECT_FALSE(is_symmetric(x_qsym(Graph(3, {{1, 3}, {2, 3}}))));
    EXPECT_FALSE(is_symmetric(QM(Composition{1, 2})));
}

TEST(GraphHopf, Product) {
    EXPECT_EQ(gp_product(g1, g2_empty), g3_empty);
    EXPECT_EQ(gp_product(g1, g2_edge), g3_edge23);
    EXPECT_EQ(gp_product(g1.graph(), g2_edge.graph()), Graph(3, {{2, 3}}));
    EXPECT_EQ(multiply(x_wqsym(g1), x_wqsym(g2_empty)), x_wqsym(g3_empty));
    EXPECT_EQ(multiply(x_wqsym(g1), x_wqsym(g2_edge)), x_wqsym(g3_edge23));
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; a + b <= 5; ++b) {
            for (auto& g : enumerate_dyck(a)) {
                for (auto& h : enumerate_dyck(b)) {
                    ASSERT_EQ(x_wqsym(gp_product(g, h)), multiply(x_wqsym(g), x_wqsym(h))) << g << " " << h;
                }
            }
        }
    }
}

TEST(GraphHopf, CoproductExample) {
    const Graph e(0);
    GraphTensor expect(2);
    expect.add_term({g3_edge12, e}, 1);
    expect.add_term({g1, g2_empty}, 1 + t);
    expect.add_term({g1, g2_edge}, 1);
    expect.add_term({g2_empty, g1}, 1 + t);
    expect.add_term({g2_edge, g1}, 1);
    expect.add_term({e, g3_edge12}, 1);
    EXPECT_EQ(gp_coproduct(g3_edge12, 2), expect);
    EXPECT_EQ(gp_coproduct(g3_edge12, 1).size(), 1u);
    RationalFunction total;
    for (const auto& [k, c] : gp_coproduct(g3_edge12, 3).evaluated_at(1)) total += c;
    EXPECT_EQ(total, RationalFunction(27));
    EXPECT_THROW(gp_coproduct(g1, 0), DomainError);
}

TEST(GraphHopf, CoproductMorphism) {
    for (int n = 0; n <= 5; ++n) {
        for (auto& g : enumerate_dyck(n)) {
            const auto d = gp_coproduct(g, 2);
            ASSERT_EQ(x_tensor(d), coproduct(x_wqsym(g))) << g;
            EXPECT_EQ(d.evaluated_at(1), d.evaluated_at(1).swapped()) << g;
        }
    }
    // The same on a graph that is not Dyck.
    const Graph g(4, {{1, 3}, {2, 4}});
    EXPECT_EQ(x_tensor(gp_coproduct(g, 2)), coproduct(x_wqsym(g)));
}

TEST(Identities, MainTheorem) {
    for (int n = 0; n <= 4; ++n) {
        for (auto& g : enumerate_dyck(n)) EXPECT_TRUE(main_identity_check(g)) << g;
    }
    // The same through the public transform.
    for (auto& g : enumerate_dyck(3)) {
        EXPECT_EQ(wqsym_transform(x_wqsym(g), alphabet_one_over_t_minus_one()) * (t - 1).pow(3), llt_wqsym(g));
    }
    EXPECT_THROW(main_identity_check(Graph(3, {{1, 3}})), DomainError);
}

TEST(Identities, CommutativeShadow) {
    for (int n = 0; n <= 5; ++n) {
        for (auto& g : enumerate_dyck(n)) {
            EXPECT_TRUE(x2llt_check(g)) << g;
            EXPECT_TRUE(dyck_specialization_check(g)) << g;
        }
    }
    EXPECT_EQ(specialize(x_wqsym(g1), alphabet_one_over_t_minus_one()), RationalFunction(1) / (t - 1));
}

TEST(Expansions, PhiDisplays) {
    EXPECT_EQ(x_phi(g1), expand(Basis::WQSymPhi, {{0, "1"}}));
    EXPECT_EQ(x_phi(g2_empty), expand(Basis::WQSymPhi, {{0, "11"}, {0, "21"}}));
    EXPECT_EQ(x_phi(g2_edge), expand(Basis::WQSymPhi, {{1, "12"}, {0, "21"}}));
    EXPECT_EQ(x_phi(g3_empty),
              expand(Basis::WQSymPhi, {{0, "111"}, {0, "121"}, {0, "212"}, {0, "221"}, {0, "211"}, {0, "321"}}));
    EXPECT_EQ(x_phi(g3_edge12),
              expand(Basis::WQSymPhi, {{1, "122"}, {1, "121"}, {0, "212"}, {1, "231"}, {0, "211"}, {0, "321"}}));
    EXPECT_EQ(x_phi(g3_edge23),
              expand(Basis::WQSymPhi, {{1, "112"}, {0, "121"}, {1, "212"}, {0, "221"}, {1, "312"}, {0, "321"}}));
    EXPECT_EQ(x_phi(g3_path),
              expand(Basis::WQSymPhi, {{2, "123"}, {1, "121"}, {1, "212"}, {1, "231"}, {1, "312"}, {0, "321"}}));
    EXPECT_EQ(x_phi(g3_complete),
              expand(Basis::WQSymPhi, {{3, "123"}, {2, "132"}, {2, "213"}, {1, "231"}, {1, "312"}, {0, "321"}}));
}

TEST(Expansions, PhiCheckDisplays) {
    EXPECT_EQ(x_phicheck(g3_empty),
              expand(Basis::WQSymPhiCheck, {{0, "123"}, {0, "122"}, {0, "112"}, {0, "121"}, {0, "212"}, {0, "111"}}));
    EXPECT_EQ(x_phicheck(g3_edge12),
              expand(Basis::WQSymPhiCheck, {{1, "123"}, {1, "122"}, {0, "213"}, {1, "121"}, {0, "212"}, {0, "211"}}));
    EXPECT_EQ(x_phicheck(g3_edge23),
              expand(Basis::WQSymPhiCheck, {{1, "123"}, {0, "132"}, {1, "112"}, {0, "121"}, {1, "212"}, {0, "221"}}));
    EXPECT_EQ(x_phicheck(g3_path),
              expand(Basis::WQSymPhiCheck, {{2, "123"}, {1, "132"}, {1, "213"}, {1, "121"}, {1, "212"}, {0, "321"}}));

    EXPECT_EQ(llt_phicheck(g3_empty),
              expand(Basis::WQSymPhiCheck, {{0, "123"}, {0, "122"}, {0, "112"}, {0, "121"}, {0, "212"}, {0, "111"}}));
    EXPECT_EQ(llt_phicheck(g3_edge12),
              expand(Basis::WQSymPhiCheck, {{1, "123"}, {1, "122"}, {0, "112"}, {1, "121"}, {0, "212"}, {0, "111"}}));
    EXPECT_EQ(llt_phicheck(g3_edge23),
              expand(Basis::WQSymPhiCheck, {{1, "123"}, {0, "122"}, {1, "112"}, {0, "121"}, {1, "212"}, {0, "111"}}));
    EXPECT_EQ(llt_phicheck(g3_path),
              expand(Basis::WQSymPhiCheck, {{2, "123"}, {1, "122"}, {1, "112"}, {1, "121"}, {1, "212"}, {0, "111"}}));
}

TEST(Expansions, AgreeWithMBasis) {
    for (int n = 0; n <= 5; ++n) {
        for (auto& g : enumerate_dyck(n)) {
            const auto x = x_wqsym(g);
            ASSERT_EQ(m_from_phi(x_phi(g)), x) << g;
            ASSERT_EQ(m_from_phicheck(x_phicheck(g)), x) << g;
            ASSERT_EQ(m_from_phicheck(llt_phicheck(g)), llt_wqsym(g)) << g;
            for (const auto& [k, c] : x_phi(g)) ASSERT_TRUE(c.is_monomial());
        }
    }
}

TEST(Expansions, DenestingBasisAtOne) {
    EXPECT_EQ(x1_mt(g1), expand(Basis::WSymmt, {{0, "1"}}));
    EXPECT_EQ(x1_mt(g2_empty), expand(Basis::WSymmt, {{0, "11"}, {0, "12"}}));
    EXPECT_EQ(x1_mt(g2_edge), expand(Basis::WSymmt, {{0, "12"}}));
    EXPECT_EQ(x1_mt(g3_empty), expand(Basis::WSymmt, {{0, "111"}, {0, "112"}, {0, "122"}, {0, "121"}, {0, "123"}}));
    EXPECT_EQ(x1_mt(g3_edge12), expand(Basis::WSymmt, {{0, "122"}, {0, "121"}, {0, "123"}}));
    EXPECT_EQ(x1_mt(g3_edge23), expand(Basis::WSymmt, {{0, "112"}, {0, "121"}, {0, "123"}}));
    EXPECT_EQ(x1_mt(g3_path), expand(Basis::WSymmt, {{0, "121"}, {0, "123"}}));
    EXPECT_EQ(x1_mt(g3_complete), expand(Basis::WSymmt, {{0, "123"}}));
    EXPECT_EQ(x1_wsym(g3_edge12), expand(Basis::WSymm, {{0, "121"}, {0, "122"}, {0, "123"}}));
    for (int n = 0; n <= 6; ++n) {
        for (auto& g : enumerate_dyck(n)) {
            const auto direct = x1_wsym(g);
            ASSERT_EQ(m_to_mt(direct), x1_mt(g)) << g;
            // Proper set partitions of G, in the m basis.
            LinearCombination proper(Basis::WSymm);
            for (auto& p : set_partitions(n)) {
                if (is_proper(g, p.word())) proper.add_term(p.word(), 1);
            }
            ASSERT_EQ(direct, proper);
        }
    }
}

TEST(Expansions, RankAtOne) {
    EXPECT_EQ(rank_at_t1(1), 1);
    EXPECT_EQ(rank_at_t1(2), 2);
    EXPECT_EQ(rank_at_t1(3), 5);
    EXPECT_EQ(rank_at_t1(4), 14);
    EXPECT_EQ(rank_at_t1(5), 42);
}

TEST(Expansions, FundamentalExpansion) {
    const auto g6 = dyck({2, 4, 4, 6, 6, 6});
    // 314652 contributes t^3 M_212321 here, and 453162 contributes t^3 F_(2,3,1) there.
    const auto s = perm("314652");
    const auto sp = bar(s.inverse());
    EXPECT_EQ(sp, perm("453162"));
    EXPECT_EQ(compose(perm("654321"), s).inverse(), sp);
    EXPECT_EQ(asc(g6, s), 3);
    EXPECT_EQ(min_g(g6, s), pw("212321"));
    EXPECT_EQ(inv_g(g6, sp), 3);
    EXPECT_EQ(des_set_g(g6, sp), (std::vector<int>{2, 3, 5}));
    EXPECT_EQ(Composition::from_descent_set(6, des_set_g(g6, sp)).conjugate(), (Composition{2, 3, 1}));
    EXPECT_EQ(evaluation(pw("212321")), (Composition{2, 3, 1}));
    for (int n = 0; n <= 5; ++n) {
        for (auto& g : enumerate_dyck(n)) {
            const auto f = sw_f_expansion(g);
            ASSERT_EQ(qsym_m_from_f(f), x_qsym(g)) << g;
            ASSERT_EQ(phi_to_f(x_phi(g)), f) << g;
        }
    }
    // Complete graph: no P-descents, so every term is F_(1^n).
    const auto fc = sw_f_expansion(DyckGraph::complete(3));
    EXPECT_EQ(fc, LinearCombination::single(Basis::QSymF, Word{1, 1, 1}, 1 + 2 * t + 2 * t * t + t.pow(3)));
}

TEST(PathGraphs, LambdaExpansions) {
    EXPECT_EQ(path_llt_lambda(1), LinearCombination::single(Basis::SymLambda, Word{1}));
    EXPECT_EQ(path_llt_lambda(2), (t - 1) * LinearCombination::single(Basis::SymLambda, Word{2}) +
                                      LinearCombination::single(Basis::SymLambda, Word{1, 1}));
    for (int n = 1; n <= 5; ++n) {
        EXPECT_TRUE(path_llt_check(n)) << n;
        EXPECT_TRUE(path_x_check(n)) << n;
    }
}

TEST(PathGraphs, SmirnovInverse) { EXPECT_TRUE(smirnov_check(5)); }
