#include "msrs/flow.hpp"

#include "msrs/instance.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boykov_kolmogorov_max_flow.hpp>

namespace msrs {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using Graph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS,
    boost::property<boost::vertex_name_t, std::string,
                    boost::property<boost::vertex_index_t, long,
                                    boost::property<boost::vertex_color_t, boost::default_color_type,
                                                    boost::property<boost::vertex_distance_t, long,
                                                                    boost::property<boost::vertex_predecessor_t,
                                                                                    Traits::edge_descriptor>>>>>,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
using Edge = Traits::edge_descriptor;

}  // namespace

IntegralPlacement integralize_small_placement(const FractionalPlacement& in) {
    const std::size_t C = in.frac.size();
    const std::size_t L = in.k.size();
    if (in.n.size() != C) throw ContractError("integralize_small_placement: demand vector size mismatch");
    std::int64_t demand = 0;
    std::vector<Rat> layer_sum(L, 0);
    for (std::size_t c = 0; c < C; ++c) {
        if (in.frac[c].size() != L) throw ContractError("integralize_small_placement: ragged fraction matrix");
        Rat sum = 0;
        for (std::size_t l = 0; l < L; ++l) {
            const Rat& f = in.frac[c][l];
            if (f < 0 || f > 1) throw ContractError("integralize_small_placement: fraction outside [0,1]");
            sum += f;
            layer_sum[l] += f;
        }
        if (sum != Rat(in.n[c])) throw ContractError("integralize_small_placement: class flow differs from n_c");
        demand += in.n[c];
    }
    for (std::size_t l = 0; l < L; ++l)
        if (layer_sum[l] > Rat(in.k[l])) throw ContractError("integralize_small_placement: layer flow exceeds k_l");

    Graph g(C + L + 2);
    auto cap = boost::get(boost::edge_capacity, g);
    auto rev = boost::get(boost::edge_reverse, g);
    auto res = boost::get(boost::edge_residual_capacity, g);
    const auto src = C + L, snk = C + L + 1;
    auto add = [&](std::size_t u, std::size_t v, long c) {
        Edge e = boost::add_edge(u, v, g).first;
        Edge r = boost::add_edge(v, u, g).first;
        cap[e] = c;
        cap[r] = 0;
        rev[e] = r;
        rev[r] = e;
        return e;
    };
    std::vector<std::vector<Edge>> mid(C, std::vector<Edge>(L));
    std::vector<std::vector<bool>> has(C, std::vector<bool>(L, false));
    for (std::size_t c = 0; c < C; ++c) add(src, c, static_cast<long>(in.n[c]));
    for (std::size_t c = 0; c < C; ++c)
        for (std::size_t l = 0; l < L; ++l)
            if (in.frac[c][l] > 0) {
                mid[c][l] = add(c, C + l, 1);
                has[c][l] = true;
            }
    for (std::size_t l = 0; l < L; ++l) add(C + l, snk, static_cast<long>(in.k[l]));

    long value = boost::boykov_kolmogorov_max_flow(g, src, snk);
    if (value < demand) throw ContractError("integralize_small_placement: max flow below the total demand");

    IntegralPlacement out;
    out.value = value;
    out.x.assign(C, std::vector<int>(L, 0));
    for (std::size_t c = 0; c < C; ++c)
        for (std::size_t l = 0; l < L; ++l)
            if (has[c][l]) out.x[c][l] = static_cast<int>(cap[mid[c][l]] - res[mid[c][l]]);
    return out;
}

}  // namespace msrs
