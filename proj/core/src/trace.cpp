#include "matchred/trace.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace matchred {

std::uint64_t event_cardinality_offset(const TraceEvent& e) {
    if (std::get_if<Deg1Match>(&e) || std::get_if<Deg2Merge>(&e)) return 1;
    if (const auto* c = std::get_if<CrownRemove>(&e)) return c->head.size();
    if (const auto* l = std::get_if<LpRemove>(&e)) return l->ones.size();
    if (const auto* r = std::get_if<RelaxedCrownReplace>(&e)) return r->head.size() - 1;
    return 0;
}

Weight event_weight_offset(const TraceEvent& e) {
    if (const auto* w = std::get_if<WDeg1>(&e)) return w->decrement;
    if (const auto* p = std::get_if<PendCycle>(&e)) return p->value_minus_anchor;
    if (const auto* m = std::get_if<MaxPath>(&e)) return m->value_no_uv;
    if (const auto* i = std::get_if<IsolatedComponent>(&e)) return i->value;
    return 0;
}

void ReductionTrace::push(TraceEvent e) {
    cardinality_offset_ += event_cardinality_offset(e);
    weight_offset_ = checked_add(weight_offset_, event_weight_offset(e));
    events_.push_back(std::move(e));
}

void ReductionTrace::append(ReductionTrace other) {
    for (auto& e : other.events_) push(std::move(e));
}

void ReductionTrace::replay(Graph& g) const {
    for (const auto& ev : events_) {
        if (const auto* d0 = std::get_if<Deg0Delete>(&ev)) {
            g.remove_vertex(d0->v);
        } else if (const auto* d1 = std::get_if<Deg1Match>(&ev)) {
            g.remove_vertex(d1->v);
            g.remove_vertex(d1->u);
        } else if (const auto* d2 = std::get_if<Deg2Merge>(&ev)) {
            g.remove_vertex(d2->v);
            g.remove_vertex(d2->u);
            g.remove_vertex(d2->w);
            g.add_vertex(d2->z);
            for (const auto& [x, mask] : d2->provenance) {
                (void)mask;
                g.add_edge(d2->z, x);
            }
        } else if (const auto* cr = std::get_if<CrownRemove>(&ev)) {
            for (VertexId v : cr->head) g.remove_vertex(v);
            for (VertexId v : cr->indep) g.remove_vertex(v);
        } else if (const auto* lp = std::get_if<LpRemove>(&ev)) {
            for (VertexId v : lp->ones) g.remove_vertex(v);
            for (VertexId v : lp->zeros) g.remove_vertex(v);
        } else if (const auto* rc = std::get_if<RelaxedCrownReplace>(&ev)) {
            std::set<VertexId> removed(rc->head.begin(), rc->head.end());
            removed.insert(rc->indep.begin(), rc->indep.end());
            std::set<VertexId> border;
            for (VertexId h : rc->head)
                for (VertexId x : g.neighbors(h))
                    if (!removed.count(x)) border.insert(x);
            for (VertexId v : removed) g.remove_vertex(v);
            g.add_vertex(rc->z);
            for (VertexId x : border) g.add_edge(rc->z, x);
        } else {
            throw validation_error("weighted event in unweighted replay");
        }
    }
}

void ReductionTrace::replay(WeightedGraph& g) const {
    for (const auto& ev : events_) {
        if (const auto* we = std::get_if<WZeroEdgeDelete>(&ev)) {
            g.remove_edge(we->u, we->v);
        } else if (const auto* wv = std::get_if<WZeroVertexDelete>(&ev)) {
            g.remove_vertex(wv->v);
        } else if (std::get_if<WDeg1Begin>(&ev)) {
            // marker only
        } else if (const auto* w1 = std::get_if<WDeg1>(&ev)) {
            g.remove_vertex(w1->v);
        } else if (const auto* we1 = std::get_if<WDeg1End>(&ev)) {
            std::map<VertexId, Weight> c(we1->counters.begin(), we1->counters.end());
            std::vector<std::pair<EdgePair, Weight>> updates;
            for (const auto& [e, w] : g.weights()) {
                Weight sub = 0;
                if (auto it = c.find(e.first); it != c.end()) sub = checked_add(sub, it->second);
                if (auto it = c.find(e.second); it != c.end()) sub = checked_add(sub, it->second);
                if (sub > 0) updates.push_back({e, w > sub ? w - sub : 0});
            }
            for (const auto& [e, w] : updates) g.set_weight(e.first, e.second, w);
        } else if (const auto* pc = std::get_if<PendCycle>(&ev)) {
            for (VertexId v : pc->rest) g.remove_vertex(v);
            g.add_vertex(pc->z);
            g.add_edge(pc->anchor, pc->z, pc->uz_weight);
        } else if (const auto* mp = std::get_if<MaxPath>(&ev)) {
            for (VertexId v : mp->inner) g.remove_vertex(v);
            g.add_vertex(mp->z);
            g.add_edge(mp->u, mp->z, mp->uz_weight);
            g.add_edge(mp->v, mp->z, mp->vz_weight);
            if (g.has_edge(mp->u, mp->v))
                g.set_weight(mp->u, mp->v, mp->uv_weight_after);
            else
                g.add_edge(mp->u, mp->v, mp->uv_weight_after);
        } else if (const auto* iso = std::get_if<IsolatedComponent>(&ev)) {
            for (VertexId v : iso->order) g.remove_vertex(v);
        } else {
            throw validation_error("unweighted event in weighted replay");
        }
    }
}

namespace {

void put_pairs(std::ostream& out, const std::vector<EdgePair>& ps) {
    out << " " << ps.size();
    for (const auto& [a, b] : ps) out << " " << a << " " << b;
}

void put_ids(std::ostream& out, const std::vector<VertexId>& vs) {
    out << " " << vs.size();
    for (VertexId v : vs) out << " " << v;
}

void put_weights(std::ostream& out, const std::vector<Weight>& ws) {
    out << " " << ws.size();
    for (Weight w : ws) out << " " << w;
}

struct TokenReader {
    std::istringstream ss;
    std::size_t lineno;
    explicit TokenReader(const std::string& line, std::size_t lineno) : ss(line), lineno(lineno) {}

    template <typename T>
    T get() {
        T value;
        if (!(ss >> value)) throw parse_error(lineno, "truncated trace event");
        return value;
    }
    std::vector<VertexId> ids() {
        auto k = get<std::size_t>();
        std::vector<VertexId> out(k);
        for (auto& v : out) v = get<VertexId>();
        return out;
    }
    std::vector<Weight> weights() {
        auto k = get<std::size_t>();
        std::vector<Weight> out(k);
        for (auto& v : out) v = get<Weight>();
        return out;
    }
    std::vector<EdgePair> pairs() {
        auto k = get<std::size_t>();
        std::vector<EdgePair> out(k);
        for (auto& p : out) {
            p.first = get<VertexId>();
            p.second = get<VertexId>();
        }
        return out;
    }
};

}  // namespace

void ReductionTrace::serialize(std::ostream& out) const {
    out << "# matchred trace v1\n";
    out << "# offsets cardinality=" << cardinality_offset_ << " weight=" << weight_offset_ << "\n";
    for (const auto& ev : events_) {
        if (const auto* d0 = std::get_if<Deg0Delete>(&ev)) {
            out << "d0 " << d0->v;
        } else if (const auto* d1 = std::get_if<Deg1Match>(&ev)) {
            out << "d1 " << d1->v << " " << d1->u;
        } else if (const auto* d2 = std::get_if<Deg2Merge>(&ev)) {
            out << "d2 " << d2->v << " " << d2->u << " " << d2->w << " " << d2->z << " "
                << (d2->uw_edge ? 1 : 0) << " " << d2->provenance.size();
            for (const auto& [x, mask] : d2->provenance) out << " " << x << " " << mask;
        } else if (const auto* cr = std::get_if<CrownRemove>(&ev)) {
            out << "crown";
            put_ids(out, cr->head);
            put_ids(out, cr->indep);
            put_pairs(out, cr->saturating);
        } else if (const auto* lp = std::get_if<LpRemove>(&ev)) {
            out << "lp";
            put_ids(out, lp->ones);
            put_ids(out, lp->zeros);
            put_pairs(out, lp->saturating);
        } else if (const auto* rc = std::get_if<RelaxedCrownReplace>(&ev)) {
            out << "rc";
            put_ids(out, rc->head);
            put_ids(out, rc->indep);
            out << " " << rc->z << " " << rc->matchings.size();
            for (const auto& [h, ps] : rc->matchings) {
                out << " " << h;
                put_pairs(out, ps);
            }
        } else if (const auto* we = std::get_if<WZeroEdgeDelete>(&ev)) {
            out << "wze " << we->u << " " << we->v;
        } else if (const auto* wv = std::get_if<WZeroVertexDelete>(&ev)) {
            out << "wzv " << wv->v;
        } else if (std::get_if<WDeg1Begin>(&ev)) {
            out << "w1b";
        } else if (const auto* w1 = std::get_if<WDeg1>(&ev)) {
            out << "w1 " << w1->v << " " << w1->u << " " << w1->decrement << " "
                << w1->original_weight;
        } else if (const auto* we1 = std::get_if<WDeg1End>(&ev)) {
            out << "w1e " << we1->counters.size();
            for (const auto& [v, c] : we1->counters) out << " " << v << " " << c;
        } else if (const auto* pc = std::get_if<PendCycle>(&ev)) {
            out << "pc " << pc->anchor << " " << pc->z << " " << pc->uz_weight;
            put_ids(out, pc->rest);
            put_weights(out, pc->weights);
            out << " " << pc->value_cycle << " " << pc->value_minus_anchor;
            put_pairs(out, pc->mm_cycle);
            put_pairs(out, pc->mm_minus_anchor);
        } else if (const auto* mp = std::get_if<MaxPath>(&ev)) {
            out << "mp " << mp->u << " " << mp->v << " " << mp->z << " " << mp->uz_weight << " "
                << mp->vz_weight << " " << (mp->uv_edge_before ? 1 : 0) << " "
                << mp->uv_weight_before << " " << mp->uv_weight_after;
            put_ids(out, mp->inner);
            put_weights(out, mp->weights);
            out << " " << mp->value_full << " " << mp->value_no_u << " " << mp->value_no_v << " "
                << mp->value_no_uv;
            put_pairs(out, mp->mm_full);
            put_pairs(out, mp->mm_no_u);
            put_pairs(out, mp->mm_no_v);
            put_pairs(out, mp->mm_no_uv);
        } else if (const auto* iso = std::get_if<IsolatedComponent>(&ev)) {
            out << "iso " << (iso->cycle ? "cyc" : "path");
            put_ids(out, iso->order);
            put_weights(out, iso->weights);
            out << " " << iso->value;
            put_pairs(out, iso->best);
        }
        out << "\n";
    }
}

ReductionTrace ReductionTrace::deserialize(std::istream& in) {
    ReductionTrace trace;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream head(line);
        std::string kind;
        head >> kind;
        TokenReader r(line.substr(kind.size()), lineno);
        if (kind == "d0") {
            trace.push(Deg0Delete{r.get<VertexId>()});
        } else if (kind == "d1") {
            Deg1Match e;
            e.v = r.get<VertexId>();
            e.u = r.get<VertexId>();
            trace.push(e);
        } else if (kind == "d2") {
            Deg2Merge e;
            e.v = r.get<VertexId>();
            e.u = r.get<VertexId>();
            e.w = r.get<VertexId>();
            e.z = r.get<VertexId>();
            e.uw_edge = r.get<int>() != 0;
            auto k = r.get<std::size_t>();
            for (std::size_t i = 0; i < k; ++i) {
                VertexId x = r.get<VertexId>();
                e.provenance[x] = r.get<unsigned>();
            }
            trace.push(e);
        } else if (kind == "crown") {
            CrownRemove e;
            e.head = r.ids();
            e.indep = r.ids();
            e.saturating = r.pairs();
            trace.push(e);
        } else if (kind == "lp") {
            LpRemove e;
            e.ones = r.ids();
            e.zeros = r.ids();
            e.saturating = r.pairs();
            trace.push(e);
        } else if (kind == "rc") {
            RelaxedCrownReplace e;
            e.head = r.ids();
            e.indep = r.ids();
            e.z = r.get<VertexId>();
            auto k = r.get<std::size_t>();
            for (std::size_t i = 0; i < k; ++i) {
                VertexId h = r.get<VertexId>();
                e.matchings[h] = r.pairs();
            }
            trace.push(e);
        } else if (kind == "wze") {
            WZeroEdgeDelete e;
            e.u = r.get<VertexId>();
            e.v = r.get<VertexId>();
            trace.push(e);
        } else if (kind == "wzv") {
            trace.push(WZeroVertexDelete{r.get<VertexId>()});
        } else if (kind == "w1b") {
            trace.push(WDeg1Begin{});
        } else if (kind == "w1") {
            WDeg1 e;
            e.v = r.get<VertexId>();
            e.u = r.get<VertexId>();
            e.decrement = r.get<Weight>();
            e.original_weight = r.get<Weight>();
            trace.push(e);
        } else if (kind == "w1e") {
            WDeg1End e;
            auto k = r.get<std::size_t>();
            for (std::size_t i = 0; i < k; ++i) {
                VertexId v = r.get<VertexId>();
                Weight c = r.get<Weight>();
                e.counters.emplace_back(v, c);
            }
            trace.push(e);
        } else if (kind == "pc") {
            PendCycle e;
            e.anchor = r.get<VertexId>();
            e.z = r.get<VertexId>();
            e.uz_weight = r.get<Weight>();
            e.rest = r.ids();
            e.weights = r.weights();
            e.value_cycle = r.get<Weight>();
            e.value_minus_anchor = r.get<Weight>();
            e.mm_cycle = r.pairs();
            e.mm_minus_anchor = r.pairs();
            trace.push(e);
        } else if (kind == "mp") {
            MaxPath e;
            e.u = r.get<VertexId>();
            e.v = r.get<VertexId>();
            e.z = r.get<VertexId>();
            e.uz_weight = r.get<Weight>();
            e.vz_weight = r.get<Weight>();
            e.uv_edge_before = r.get<int>() != 0;
            e.uv_weight_before = r.get<Weight>();
            e.uv_weight_after = r.get<Weight>();
            e.inner = r.ids();
            e.weights = r.weights();
            e.value_full = r.get<Weight>();
            e.value_no_u = r.get<Weight>();
            e.value_no_v = r.get<Weight>();
            e.value_no_uv = r.get<Weight>();
            e.mm_full = r.pairs();
            e.mm_no_u = r.pairs();
            e.mm_no_v = r.pairs();
            e.mm_no_uv = r.pairs();
            trace.push(e);
        } else if (kind == "iso") {
            IsolatedComponent e;
            std::string tag;
            r.ss >> tag;
            if (tag != "cyc" && tag != "path") throw parse_error(lineno, "bad iso tag");
            e.cycle = tag == "cyc";
            e.order = r.ids();
            e.weights = r.weights();
            e.value = r.get<Weight>();
            e.best = r.pairs();
            trace.push(e);
        } else {
            throw parse_error(lineno, "unknown trace event '" + kind + "'");
        }
    }
    return trace;
}

}  // namespace matchred
