#pragma once

/*
   Seeded random generator of small CHC systems over a finite universe,
   used by property tests, the acceptance suite and `hornfb gen`.
   Systems are produced as text and parsed, so they are normalized the
   same way as hand-written input.
 */

#include "hornfb/core/parser.hpp"

#include <random>
#include <sstream>

namespace hornfb::gen {

struct options {
    std::size_t max_preds = 4;
    std::size_t max_arity = 2;
    std::size_t min_clauses = 2;
    std::size_t max_clauses = 8;
    std::size_t max_body = 2;
    int universe_lo = 0;
    int universe_hi = 3; // inclusive; default universe {0,1,2,3}
    bool acyclic = false;
    bool explicit_goal = false; // goal on a predicate instead of integrity clauses
};

namespace detail {

class text_builder {
  public:
    text_builder(unsigned seed, const options &opt) : rng_(seed), opt_(opt) {}

    std::string build() {
        std::ostringstream os;
        os << "universe {";
        for (int v = opt_.universe_lo; v <= opt_.universe_hi; ++v)
            os << (v == opt_.universe_lo ? "" : ", ") << v;
        os << "}.\n";
        std::size_t npreds = pick(1, opt_.max_preds);
        for (std::size_t i = 0; i < npreds; ++i) {
            arity_.push_back(pick(0, opt_.max_arity));
            os << "pred p" << i << "/" << arity_.back() << ".\n";
        }
        std::size_t nclauses = pick(opt_.min_clauses, opt_.max_clauses);
        bool has_integrity = false;
        for (std::size_t k = 0; k < nclauses; ++k) {
            bool initial = k == 0 || chance(0.25);
            bool integrity = !opt_.explicit_goal && k > 0 && chance(0.2);
            has_integrity |= integrity;
            os << clause(initial, integrity) << "\n";
        }
        if (!opt_.explicit_goal && !has_integrity)
            os << clause(false, true) << "\n";
        if (opt_.explicit_goal) {
            std::size_t p = pick(0, npreds - 1);
            os << "goal p" << p;
            if (arity_[p] > 0) {
                os << "(";
                for (std::size_t i = 0; i < arity_[p]; ++i)
                    os << (i ? ", G" : "G") << i;
                os << ")";
            }
            if (arity_[p] > 0 && chance(0.6))
                os << " : " << comparison({"G0"});
            os << ".\n";
        }
        return os.str();
    }

  private:
    std::size_t pick(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
    int pick_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    std::string app(std::size_t p, const std::vector<std::string> &pool) {
        std::string out = "p" + std::to_string(p);
        if (arity_[p] == 0)
            return out;
        out += "(";
        for (std::size_t i = 0; i < arity_[p]; ++i)
            out += (i ? ", " : "") + pool[pick(0, pool.size() - 1)];
        return out + ")";
    }

    std::string term(const std::vector<std::string> &vars) {
        std::string out;
        std::size_t n = pick(1, std::min<std::size_t>(2, vars.size()));
        for (std::size_t i = 0; i < n; ++i) {
            int c = pick_int(-2, 2);
            if (c == 0)
                c = 1;
            out += (i ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : ""));
            int mag = c < 0 ? -c : c;
            if (mag != 1)
                out += std::to_string(mag) + "*";
            out += vars[pick(0, vars.size() - 1)];
        }
        int k = pick_int(-2, 2);
        if (k > 0)
            out += " + " + std::to_string(k);
        else if (k < 0)
            out += " - " + std::to_string(-k);
        return out;
    }

    std::string comparison(const std::vector<std::string> &vars) {
        static const char *ops[] = {"<=", "<", "=", ">=", ">", "!="};
        return term(vars) + " " + ops[pick(0, 5)] + " " + std::to_string(pick_int(opt_.universe_lo, opt_.universe_hi));
    }

    std::string clause(bool initial, bool integrity) {
        static const std::vector<std::string> pool{"X", "Y", "Z", "W"};
        std::size_t npreds = arity_.size();
        std::size_t head = pick(0, npreds - 1);
        std::vector<std::string> items;
        std::size_t nbody = initial ? 0 : pick(1, opt_.max_body);
        for (std::size_t i = 0; i < nbody; ++i) {
            std::size_t b = pick(0, npreds - 1);
            if (opt_.acyclic && !integrity) {
                if (npreds == 1)
                    break;
                if (head == 0)
                    head = pick(1, npreds - 1);
                b = pick(0, head - 1);
            }
            items.push_back(app(b, pool));
        }
        std::size_t nconstr = pick(0, 2);
        for (std::size_t i = 0; i < nconstr; ++i) {
            if (chance(0.2))
                items.push_back("(" + comparison(pool) + " ; " + comparison(pool) + ")");
            else
                items.push_back(comparison(pool));
        }
        std::string h;
        if (integrity) {
            h = "false";
        } else if (arity_[head] == 0) {
            h = app(head, pool);
        } else {
            h = "p" + std::to_string(head) + "(";
            for (std::size_t i = 0; i < arity_[head]; ++i) {
                std::string arg = pool[pick(0, pool.size() - 1)];
                if (chance(0.3))
                    arg += " + 1";
                h += (i ? ", " : "") + arg;
            }
            h += ")";
        }
        if (items.empty())
            return h + ".";
        std::string out = h + " :- ";
        for (std::size_t i = 0; i < items.size(); ++i)
            out += (i ? ", " : "") + items[i];
        return out + ".";
    }

    std::mt19937 rng_;
    options opt_;
    std::vector<std::size_t> arity_;
};

} // namespace detail

inline std::string random_system_text(unsigned seed, const options &opt = {}) {
    return detail::text_builder(seed, opt).build();
}

inline horn_system random_system(unsigned seed, const options &opt = {}) {
    return parse_system(random_system_text(seed, opt));
}

} // namespace hornfb::gen
