#include "nonproj/models.hpp"

#include <algorithm>

namespace nonproj {

namespace {

// Poincare-adjoint pushforward against a pure exterior ambient: each basis
// element pairs (+-1) with exactly its complementary mask, so no linear
// solve is needed.  `embed` remaps ambient indices into the current stage.
std::function<Elem(const Elem&)> exterior_adjoint_pushforward(
    std::shared_ptr<const ExteriorAlgebra> amb, std::shared_ptr<const GradedAlgebra> center,
    AlgebraMorphism restriction_at_ambient, int codim, std::vector<int> embed) {
    return [amb, center, restriction_at_ambient = std::move(restriction_at_ambient), codim,
            embed = std::move(embed)](const Elem& w) {
        if (w.is_zero()) return Elem();
        int d = center->degree_of(w);
        int comp = amb->top_degree() - d - 2 * codim;
        std::uint32_t full = (1u << amb->generators()) - 1;
        Elem out;
        for (int x : amb->basis_indices(comp)) {
            const Elem& rx = restriction_at_ambient.image(x);
            if (rx.is_zero()) continue;
            Rat val = center->pair(w, rx);
            if (sgn(val) == 0) continue;
            std::uint32_t cm = full ^ amb->mask_of(x);
            int b = amb->index_of_mask(cm);
            Rat s = amb->integrate(amb->mul_basis(b, x));
            out.accumulate(embed[b], val / s);
        }
        out.normalize();
        return out;
    };
}

AlgebraMorphism reindex_images(const AlgebraMorphism& m,
                               const std::shared_ptr<const GradedAlgebra>& new_dst,
                               const std::vector<int>& embed) {
    std::vector<Elem> images(m.src().total_dim());
    for (int i = 0; i < m.src().total_dim(); ++i) {
        Elem out;
        for (const auto& t : m.image(i).terms()) out.accumulate(embed[t.index], t.coeff);
        out.normalize();
        images[i] = std::move(out);
    }
    return AlgebraMorphism(m.src_ptr(), new_dst, std::move(images));
}

struct PointSpec {
    std::string name;
    std::array<bool, 4> on;  // membership in Tx0, 0xT, diag, graph
};

// center model of one subtorus after its separating points are blown up
struct CenterModel {
    std::shared_ptr<const GradedAlgebra> algebra;
    // per ambient point (by position in the global point list): the blow-up
    // stage inside this center and the index embedding from that stage to the
    // final center algebra; absent when the point is not on this subtorus
    struct Nested {
        std::shared_ptr<const BlowupAlgebra> stage;
        std::vector<int> embed;  // stage index -> final center index
    };
    std::vector<std::optional<Nested>> nested;
    std::vector<Elem> chern;  // c_1..c_n of the (twisted) normal bundle
};

std::vector<int> identity_map(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

void forward_map(std::vector<int>& map, const BlowupAlgebra& b) {
    for (int& v : map) v = b.tau_index(v);
}

}  // namespace

std::vector<Rat> default_kummer_chern_kappa(int n) {
    auto binom = [](int a, int b) {
        if (b < 0 || b > a) return Int(0);
        Int r;
        mpz_bin_uiui(r.get_mpz_t(), a, b);
        return r;
    };
    // c(T of the blown torus) restricted to a component: sum_a (-1)^a gamma_a E^a
    // with gamma_a = C(n,a) - C(n,a-1); the branched double cover multiplies
    // by (1+2E)/(1+E), and pulling back divides the coefficient of c_i by 2^i.
    std::vector<Rat> kappa(n);
    for (int i = 1; i <= n; ++i) {
        Rat beta = 0;
        for (int a = 0; a <= i; ++a) {
            int b = i - a;
            Rat ca = Rat(binom(n, a) - binom(n, a - 1));
            if (a % 2) ca = -ca;
            Rat cb = b == 0 ? Rat(1) : Rat((b % 2) ? 1 : -1);
            beta += ca * cb;
        }
        Rat pow2 = 1;
        for (int k = 0; k < i; ++k) pow2 *= 2;
        kappa[i - 1] = beta / pow2;
    }
    return kappa;
}

namespace {

TorusSideModel build_torus_side(const TorusDatum& t, int level, bool with_f) {
    if (level != 1 && level != 2) throw Error("model level must be 1 or 2");
    int n = t.n;
    int fc = with_f ? 2 : 0;
    int m_amb = 4 * n + fc;
    if (m_amb > 16) throw Error("ambient rank exceeds the desk-scale exterior limit");

    TorusSideModel model;
    model.n = n;
    model.level = level;
    model.with_f = with_f;
    auto ambient = std::make_shared<ExteriorAlgebra>(m_amb);
    model.ambient = ambient;
    auto center_sub = std::make_shared<ExteriorAlgebra>(2 * n + fc);
    auto center_pt = std::make_shared<ExteriorAlgebra>(fc);

    // degree-1 restriction data for the four subtori (times F)
    const char* names[4] = {"Tx0", "0xT", "diag", "graph"};
    std::vector<std::vector<Elem>> sub_gen_images(4, std::vector<Elem>(m_amb));
    for (int g = 0; g < 4; ++g) {
        for (int i = 0; i < 2 * n; ++i) {
            Elem first, second;
            switch (g) {
                case 0:
                    first = center_sub->generator(i);
                    break;
                case 1:
                    second = center_sub->generator(i);
                    break;
                case 2:
                    first = center_sub->generator(i);
                    second = center_sub->generator(i);
                    break;
                case 3: {
                    first = center_sub->generator(i);
                    break;
                }
            }
            sub_gen_images[g][i] += first;
            sub_gen_images[g][2 * n + i] += second;
        }
        if (g == 3) {
            // restriction to the graph sends the second block by phi^T:
            // e_{2n+j} -> sum_i phi_{ji} gen_i
            for (int j = 0; j < 2 * n; ++j) {
                Elem img;
                for (int i = 0; i < 2 * n; ++i) {
                    if (sgn(t.phi.at(j, i)) == 0) continue;
                    img.accumulate(center_sub->generator(i).terms().front().index,
                                   Rat(t.phi.at(j, i)));
                }
                img.normalize();
                sub_gen_images[g][2 * n + j] = std::move(img);
            }
        }
        for (int k = 0; k < fc; ++k) sub_gen_images[g][4 * n + k] = center_sub->generator(2 * n + k);
    }
    std::vector<Elem> pt_gen_images(m_amb);
    for (int k = 0; k < fc; ++k) pt_gen_images[4 * n + k] = center_pt->generator(k);

    auto kernel_of_images = [&](const std::vector<Elem>& images,
                                const std::shared_ptr<const GradedAlgebra>& center) {
        QMat mat(center->dim(1), m_amb);
        for (int c = 0; c < m_amb; ++c) {
            if (images[c].is_zero()) continue;
            auto v = center->coords(images[c], 1);
            for (int r = 0; r < center->dim(1); ++r) mat.at(r, c) = v[r];
        }
        return kernel_basis(mat);
    };

    // point inventory
    std::vector<PointSpec> points;
    model.num_x_points = 0;
    model.num_y_points = 0;
    if (level == 2) {
        auto counts = intersection_counts(t.phi);
        model.num_x_points = counts.diagonal_graph;
        model.num_y_points = counts.graph_factor - 1;
        if (model.num_x_points + model.num_y_points > 24)
            throw Error("too many separating points for the desk-scale level-2 model");
        long nx = model.num_x_points.get_si(), ny = model.num_y_points.get_si();
        for (long i = 1; i <= nx; ++i)
            points.push_back({"x" + std::to_string(i),
                              i == 1 ? std::array<bool, 4>{true, true, true, true}
                                     : std::array<bool, 4>{false, false, true, true}});
        for (long j = 1; j <= ny; ++j)
            points.push_back({"y" + std::to_string(j), {true, false, false, true}});
    } else if (with_f) {
        // the class over x1 x F cuts out the sublattice L; treat the center
        // as disjoint from the subtorus models at level 1
        points.push_back({"x1", {false, false, false, false}});
    }

    // center models (possibly blown at their separating points)
    std::vector<CenterModel> centers(4);
    for (int g = 0; g < 4; ++g) {
        CenterModel& cm = centers[g];
        cm.nested.resize(points.size());
        std::shared_ptr<const GradedAlgebra> cur = center_sub;
        std::vector<int> sub_to_cur = identity_map(center_sub->total_dim());
        AlgebraMorphism pt_in_sub = AlgebraMorphism::from_generator_images(
            center_sub, center_pt,
            [&] {
                std::vector<Elem> imgs(center_sub->generators());
                for (int k = 0; k < fc; ++k) imgs[2 * n + k] = center_pt->generator(k);
                return imgs;
            }());
        AlgebraMorphism pt_cur = pt_in_sub;
        std::vector<std::pair<size_t, std::shared_ptr<const BlowupAlgebra>>> stages;
        for (size_t p = 0; p < points.size(); ++p) {
            if (!points[p].on[g]) continue;
            BlowupSpec spec;
            spec.name = points[p].name + "@" + names[g];
            spec.center = center_pt;
            spec.restriction = pt_cur;
            spec.codim = n;
            spec.pushforward = exterior_adjoint_pushforward(center_sub, center_pt, pt_in_sub,
                                                            n, sub_to_cur);
            auto blown = std::make_shared<BlowupAlgebra>(cur, spec);
            stages.push_back({p, blown});
            forward_map(sub_to_cur, *blown);
            pt_cur = lift_through_blowup(blown, pt_cur);
            cur = blown;
        }
        // embeddings from each stage into the final center algebra
        for (size_t s = 0; s < stages.size(); ++s) {
            CenterModel::Nested nest;
            nest.stage = stages[s].second;
            nest.embed = identity_map(nest.stage->total_dim());
            for (size_t s2 = s + 1; s2 < stages.size(); ++s2) forward_map(nest.embed, *stages[s2].second);
            cm.nested[stages[s].first] = std::move(nest);
        }
        cm.algebra = cur;
        // twisted normal data c_i = C(n,i) (sum of exceptional divisors)^i
        if (!stages.empty()) {
            Elem esum;
            for (size_t s = 0; s < stages.size(); ++s) {
                const auto& nest = *cm.nested[stages[s].first];
                Elem e0 = Elem::basis(nest.stage->eps_index(0, center_pt->unit_index()));
                for (const auto& term : e0.terms()) esum.accumulate(nest.embed[term.index], term.coeff);
            }
            esum.normalize();
            cm.chern.resize(n);
            for (int i = 1; i <= n; ++i) {
                Int c;
                mpz_bin_uiui(c.get_mpz_t(), n, i);
                cm.chern[i - 1] = cur->power(esum, i).scaled(Rat(c));
            }
        }
        model.subtorus_centers.push_back(
            {names[g], {}, kernel_of_images(sub_gen_images[g], center_sub)});
    }

    // ambient chain: points first, then the four subtori
    std::shared_ptr<const GradedAlgebra> cur = ambient;
    std::vector<int> amb_to_cur = identity_map(ambient->total_dim());
    std::vector<AlgebraMorphism> point_restr(points.size());
    AlgebraMorphism pt_amb =
        AlgebraMorphism::from_generator_images(ambient, center_pt, pt_gen_images);
    for (size_t p = 0; p < points.size(); ++p) point_restr[p] = pt_amb;
    std::vector<AlgebraMorphism> sub_restr(4);
    for (int g = 0; g < 4; ++g) {
        // ambient -> final center model: generator images re-indexed through
        // the center chain
        std::vector<Elem> imgs(m_amb);
        std::vector<int> embed = identity_map(center_sub->total_dim());
        // recompute the chain embedding center_sub -> centers[g].algebra
        {
            std::vector<std::shared_ptr<const BlowupAlgebra>> chain;
            for (const auto& nest : centers[g].nested)
                if (nest) chain.push_back(nest->stage);
            for (const auto& b : chain) forward_map(embed, *b);
        }
        for (int c = 0; c < m_amb; ++c) {
            Elem out;
            for (const auto& term : sub_gen_images[g][c].terms())
                out.accumulate(embed[term.index], term.coeff);
            out.normalize();
            imgs[c] = std::move(out);
        }
        sub_restr[g] = AlgebraMorphism::from_generator_images(ambient, centers[g].algebra, imgs);
    }
    // ambient-level restrictions are kept for the cheap adjoint pushforwards
    std::vector<AlgebraMorphism> sub_restr_ambient = sub_restr;

    std::vector<int> pt_class_tracker;
    for (size_t p = 0; p < points.size(); ++p) {
        BlowupSpec spec;
        spec.name = points[p].name;
        spec.center = center_pt;
        spec.restriction = point_restr[p];
        spec.codim = 2 * n;
        spec.pushforward =
            exterior_adjoint_pushforward(ambient, center_pt, pt_amb, 2 * n, amb_to_cur);
        auto blown = std::make_shared<BlowupAlgebra>(cur, spec);
        pt_class_tracker.push_back(blown->eps_index(0, center_pt->unit_index()));
        for (size_t q = 0; q < pt_class_tracker.size() - 1; ++q)
            pt_class_tracker[q] = blown->tau_index(pt_class_tracker[q]);
        forward_map(amb_to_cur, *blown);
        for (size_t q = p + 1; q < points.size(); ++q)
            point_restr[q] = lift_through_blowup(blown, point_restr[q]);
        for (int g = 0; g < 4; ++g) {
            std::function<Elem(int, int)> eps_images;
            if (points[p].on[g]) {
                const auto& nest = *centers[g].nested[p];
                eps_images = [nest](int k, int zi) {
                    Elem raw = nest.stage->push_xi_power(k, Elem::basis(zi));
                    Elem out;
                    for (const auto& term : raw.terms())
                        out.accumulate(nest.embed[term.index], term.coeff);
                    out.normalize();
                    return out;
                };
            }
            sub_restr[g] = lift_through_blowup(blown, sub_restr[g], eps_images);
        }
        cur = blown;
    }
    for (size_t p = 0; p < points.size(); ++p) {
        model.point_classes.push_back(pt_class_tracker[p]);
        model.point_kernels.push_back(kernel_of_images(pt_gen_images, center_pt));
    }

    std::vector<int> sub_class_tracker;
    for (int g = 0; g < 4; ++g) {
        BlowupSpec spec;
        spec.name = names[g];
        spec.center = centers[g].algebra;
        spec.restriction = sub_restr[g];
        spec.codim = n;
        spec.chern = centers[g].chern;
        bool restriction_kills_eps = points.empty();
        if (restriction_kills_eps)
            spec.pushforward = exterior_adjoint_pushforward(ambient, centers[g].algebra,
                                                            sub_restr_ambient[g], n, amb_to_cur);
        // otherwise the generic Poincare-adjoint pushforward is used
        auto blown = std::make_shared<BlowupAlgebra>(cur, spec);
        sub_class_tracker.push_back(blown->eps_index(0, centers[g].algebra->unit_index()));
        for (int q = 0; q < g; ++q) sub_class_tracker[q] = blown->tau_index(sub_class_tracker[q]);
        for (auto& v : model.point_classes) v = blown->tau_index(v);
        forward_map(amb_to_cur, *blown);
        for (int h = g + 1; h < 4; ++h) sub_restr[h] = lift_through_blowup(blown, sub_restr[h]);
        cur = blown;
    }
    for (int g = 0; g < 4; ++g) model.subtorus_centers[g].h2_classes = {sub_class_tracker[g]};
    model.algebra = cur;
    return model;
}

}  // namespace

TorusSideModel build_X_model(const TorusDatum& t, int level) {
    return build_torus_side(t, level, false);
}

TorusSideModel build_XF_model(const TorusDatum& t, int level) {
    return build_torus_side(t, level, true);
}

TorusSideModel build_X1_model(const TorusDatum& t, const std::vector<int>& multiplicities) {
    if (multiplicities.size() != 4) throw Error("need one multiplicity per subtorus center");
    for (int m : multiplicities)
        if (m < 1) throw Error("multiplicities must be positive");
    TorusSideModel model = build_torus_side(t, 1, false);
    int n = model.n;
    auto ambient = model.ambient;
    auto center_sub = std::make_shared<ExteriorAlgebra>(2 * n);

    // restrictions of the locus centers (subtorus cross a fiber point): the
    // tau chain restricts like the subtorus, every exceptional class
    // restricts to zero
    std::vector<AlgebraMorphism> locus(4);
    {
        // rebuild the ambient-level generator images (same as build_torus_side)
        for (int g = 0; g < 4; ++g) {
            std::vector<Elem> imgs(4 * n);
            for (int i = 0; i < 2 * n; ++i) {
                switch (g) {
                    case 0: imgs[i] = center_sub->generator(i); break;
                    case 1: imgs[2 * n + i] = center_sub->generator(i); break;
                    case 2:
                        imgs[i] = center_sub->generator(i);
                        imgs[2 * n + i] = center_sub->generator(i);
                        break;
                    case 3: imgs[i] = center_sub->generator(i); break;
                }
            }
            if (g == 3)
                for (int j = 0; j < 2 * n; ++j) {
                    Elem img;
                    for (int i = 0; i < 2 * n; ++i)
                        if (sgn(t.phi.at(j, i)) != 0)
                            img.accumulate(center_sub->generator(i).terms().front().index,
                                           Rat(t.phi.at(j, i)));
                    img.normalize();
                    imgs[2 * n + j] = std::move(img);
                }
            locus[g] = AlgebraMorphism::from_generator_images(ambient, center_sub, imgs);
        }
    }
    std::vector<AlgebraMorphism> locus_ambient = locus;
    // lift through the four existing blow-ups (zero on all exceptional parts)
    std::vector<int> amb_to_cur = identity_map(ambient->total_dim());
    {
        std::vector<std::shared_ptr<const BlowupAlgebra>> chain;
        for (auto a = std::dynamic_pointer_cast<const BlowupAlgebra>(model.algebra); a;
             a = std::dynamic_pointer_cast<const BlowupAlgebra>(a->base_ptr()))
            chain.push_back(a);
        std::reverse(chain.begin(), chain.end());
        for (const auto& b : chain) {
            for (int g = 0; g < 4; ++g) locus[g] = lift_through_blowup(b, locus[g]);
            forward_map(amb_to_cur, *b);
        }
    }

    std::shared_ptr<const GradedAlgebra> cur = model.algebra;
    struct TrackedClass {
        int group;
        int idx;
    };
    std::vector<TrackedClass> tracked;
    for (int g = 0; g < 4; ++g)
        for (int idx : model.subtorus_centers[g].h2_classes) tracked.push_back({g, idx});
    for (int g = 0; g < 4; ++g)
        for (int extra = 1; extra < multiplicities[g]; ++extra) {
            BlowupSpec spec;
            spec.name = model.subtorus_centers[g].name + "+fiber" + std::to_string(extra);
            spec.center = center_sub;
            spec.restriction = locus[g];
            spec.codim = n;
            spec.pushforward = exterior_adjoint_pushforward(ambient, center_sub,
                                                            locus_ambient[g], n, amb_to_cur);
            auto blown = std::make_shared<BlowupAlgebra>(cur, spec);
            for (auto& tc : tracked) tc.idx = blown->tau_index(tc.idx);
            tracked.push_back({g, blown->eps_index(0, center_sub->unit_index())});
            forward_map(amb_to_cur, *blown);
            for (int h = 0; h < 4; ++h) locus[h] = lift_through_blowup(blown, locus[h]);
            cur = blown;
        }
    for (int g = 0; g < 4; ++g) model.subtorus_centers[g].h2_classes.clear();
    for (const auto& tc : tracked) model.subtorus_centers[tc.group].h2_classes.push_back(tc.idx);
    model.algebra = cur;
    return model;
}

X2Model build_X2_model(const TorusDatum& t, const X2ChernConfig& cfg) {
    int n = t.n;
    X2Model model;
    auto k = std::make_shared<KummerAlgebra>(n);
    auto kk = std::make_shared<TensorAlgebra>(k, k);
    model.kummer = k;
    model.kk = kk;
    model.psi = kummer_selfmap_pullback(k, t.phi);
    AlgebraMorphism psi_inv = invert_morphism(model.psi);

    // dual basis of H*(K) for the diagonal pushforward
    std::vector<Elem> dual(k->total_dim());
    for (int d = 0; d <= k->top_degree(); ++d) {
        if (k->dim(d) == 0) continue;
        QMat g = k->pairing_matrix(d);
        QMat x = g.inverse();
        for (int r = 0; r < k->dim(d); ++r) {
            std::vector<Rat> col(x.rows());
            for (int c = 0; c < x.rows(); ++c) col[c] = x.at(c, r);
            dual[k->basis_indices(d)[r]] = k->from_coords(col, k->top_degree() - d);
        }
    }
    auto diag_push = [k, kk, dual](const Elem& w) {
        Elem out;
        for (int i = 0; i < k->total_dim(); ++i) {
            Elem prod = k->mul(w, Elem::basis(i));
            if (prod.is_zero()) continue;
            int sigma = (k->degree_of(i) % 2) ? -1 : 1;
            for (const auto& tp : prod.terms())
                for (const auto& td : dual[i].terms())
                    out.accumulate(kk->pair_index(tp.index, td.index),
                                   tp.coeff * td.coeff * sigma);
        }
        out.normalize();
        return out;
    };
    auto graph_push = [k, kk, diag_push, psi_inv](const Elem& w) {
        Elem dp = diag_push(w);
        Elem out;
        for (const auto& term : dp.terms()) {
            auto [p, q] = kk->components(term.index);
            const Elem& iq = psi_inv.image(q);
            for (const auto& tq : iq.terms())
                out.accumulate(kk->pair_index(p, tq.index), term.coeff * tq.coeff);
        }
        out.normalize();
        return out;
    };

    // restrictions
    std::vector<Elem> diag_images(kk->total_dim()), graph_images(kk->total_dim());
    for (int i = 0; i < kk->total_dim(); ++i) {
        auto [p, q] = kk->components(i);
        diag_images[i] = k->mul_basis(p, q);
        graph_images[i] = k->mul(Elem::basis(p), model.psi.image(q));
    }
    model.diag_restriction = AlgebraMorphism(kk, k, std::move(diag_images));
    AlgebraMorphism graph_restriction_kk(kk, k, std::move(graph_images));

    // normal data
    std::vector<Rat> kappa = cfg.kappa.empty() ? default_kummer_chern_kappa(n) : cfg.kappa;
    if (static_cast<int>(kappa.size()) != n) throw Error("need n Chern coefficients");
    std::vector<Elem> chern(n);
    for (int i = 1; i <= n; ++i) {
        Elem sum;
        for (int x = 0; x < k->num_points(); ++x)
            sum += k->power(k->point_class(x), i);
        chern[i - 1] = sum.scaled(kappa[i - 1]);
    }
    if (cfg.tamper_invariant_c1)
        chern[0] = k->from_even_mask(0b11u, kappa[0]);

    BlowupSpec diag_spec;
    diag_spec.name = "diagK";
    diag_spec.center = k;
    diag_spec.restriction = model.diag_restriction;
    diag_spec.codim = n;
    diag_spec.chern = chern;
    diag_spec.pushforward = diag_push;
    auto first = std::make_shared<BlowupAlgebra>(kk, diag_spec);

    BlowupSpec graph_spec;
    graph_spec.name = "graphK";
    graph_spec.center = k;
    graph_spec.restriction = lift_through_blowup(first, graph_restriction_kk);
    graph_spec.codim = n;
    graph_spec.chern = chern;
    graph_spec.pushforward = [first, graph_push](const Elem& w) {
        return first->embed_tau(graph_push(w));
    };
    auto second = std::make_shared<BlowupAlgebra>(first, graph_spec);
    model.graph_restriction = graph_spec.restriction;

    model.h_diag = second->tau_index(first->eps_index(0, k->unit_index()));
    model.h_graph = second->eps_index(0, k->unit_index());
    auto fwd = [&](int kk_index) { return second->tau_index(first->tau_index(kk_index)); };
    for (int x = 0; x < k->num_points(); ++x) {
        model.ex_left.push_back(fwd(kk->pair_index(k->exceptional_index(x, 1), k->unit_index())));
        model.ex_right.push_back(fwd(kk->pair_index(k->unit_index(), k->exceptional_index(x, 1))));
    }
    for (int i : k->basis_indices(2))
        if (k->is_invariant(i)) {
            model.a2_left.push_back(fwd(kk->pair_index(i, k->unit_index())));
            model.a2_right.push_back(fwd(kk->pair_index(k->unit_index(), i)));
        }
    model.algebra = second;
    return model;
}

}  // namespace nonproj
