#include "hilbert/transform.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace hilbert {

void TransformConfig::check() const {
    if (target_pool_size < 1)
        throw std::invalid_argument("TransformConfig: target_pool_size must be at least 1");
    if (max_replacement_height < 0)
        throw std::invalid_argument("TransformConfig: negative max_replacement_height");
    if (branch_probability < 0.0 || branch_probability > 1.0)
        throw std::invalid_argument("TransformConfig: branch_probability outside [0, 1]");
    if (namespace_pool.empty())
        throw std::invalid_argument("TransformConfig: namespace_pool is empty");
    for (const std::string& v : namespace_pool) {
        if (!is_valid_variable_name(v))
            throw std::invalid_argument("TransformConfig: bad pool variable '" + v + "'");
    }
}

void AugmentConfig::check() const {
    transform.check();
    if (share < 0.0 || share > 1.0)
        throw std::invalid_argument("AugmentConfig: transform_share outside [0, 1]");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos)
            comma = s.size();
        std::string item = trim(s.substr(pos, comma - pos));
        if (!item.empty())
            out.push_back(std::move(item));
        pos = comma + 1;
    }
    return out;
}

}  // namespace

AugmentConfig load_augment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");

    AugmentConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        line = trim(line);
        if (line.empty())
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "transform_share")
                cfg.share = std::stod(value);
            else if (key == "target_pool_size")
                cfg.transform.target_pool_size = std::stoi(value);
            else if (key == "max_replacement_height")
                cfg.transform.max_replacement_height = std::stoi(value);
            else if (key == "branch_probability")
                cfg.transform.branch_probability = std::stod(value);
            else if (key == "namespace_pool")
                cfg.transform.namespace_pool = split_list(value);
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " + e.what());
        } catch (const std::out_of_range&) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": value out of range");
        }
    }
    cfg.check();
    return cfg;
}

namespace {

// Pool of 1..target_pool_size distinct names sampled from the namespace.
std::vector<std::string> draw_target_pool(const TransformConfig& cfg, RandomStream& rng) {
    const std::size_t cap =
        std::min<std::size_t>(cfg.namespace_pool.size(), cfg.target_pool_size);
    const std::size_t want = 1 + rng.below(cap);
    std::vector<std::string> names = cfg.namespace_pool;
    // Partial Fisher-Yates: the first `want` slots become the sample.
    for (std::size_t i = 0; i < want; ++i)
        std::swap(names[i], names[i + rng.below(names.size() - i)]);
    names.resize(want);
    return names;
}

}  // namespace

Substitution random_substitution(const std::set<std::string>& domain, const TransformConfig& cfg,
                                 RandomStream& rng) {
    cfg.check();
    std::vector<std::string> pool = draw_target_pool(cfg, rng);
    Substitution subst;
    for (const std::string& var : domain) {
        subst.set(var,
                  random_formula(pool, cfg.max_replacement_height, rng, cfg.branch_probability));
    }
    return subst;
}

std::pair<ReasoningInstance, Proof> transform_instance(const Substitution& subst,
                                                       const ReasoningInstance& instance,
                                                       const Proof& proof) {
    if (!is_valid(instance, proof))
        throw std::invalid_argument("transform_instance: input proof does not validate");

    ReasoningInstance out = instance;
    out.goal = subst.apply(instance.goal);
    for (Formula& a : out.assumptions)
        a = subst.apply(a);

    Proof mapped;
    mapped.steps.reserve(proof.steps.size());
    for (const ProofStep& step : proof.steps) {
        ProofStep next{subst.apply(step.formula), step.justification};
        if (auto* axiom = std::get_if<AxiomInstance>(&next.justification)) {
            // subst ∘ stored, kept on exactly the schema placeholders; the
            // composed map must stay a legal axiom instantiation.
            Substitution composed;
            for (const std::string& name : axiom_placeholders(axiom->schema))
                composed.set(name, subst.apply(*axiom->subst.find(name)));
            axiom->subst = std::move(composed);
        }
        mapped.steps.push_back(std::move(next));
    }
    return {std::move(out), std::move(mapped)};
}

std::vector<AugmentedItem> augment_batch(const std::vector<std::pair<ReasoningInstance, Proof>>& batch,
                                         double share, const TransformConfig& cfg,
                                         std::uint64_t master_seed) {
    if (share < 0.0 || share > 1.0)
        throw std::invalid_argument("augment_batch: share outside [0, 1]");
    cfg.check();

    std::vector<AugmentedItem> out;
    out.reserve(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto& [instance, proof] = batch[i];
        RandomStream rng = RandomStream::derive(master_seed, i, stream_salt::augment);
        if (!rng.bernoulli(share)) {
            out.push_back(AugmentedItem{instance, proof, false});
            continue;
        }
        std::set<std::string> domain = variables(instance.goal);
        for (const Formula& a : instance.assumptions) {
            std::set<std::string> more = variables(a);
            domain.insert(more.begin(), more.end());
        }
        Substitution subst = random_substitution(domain, cfg, rng);
        auto [mapped_instance, mapped_proof] = transform_instance(subst, instance, proof);
        out.push_back(AugmentedItem{std::move(mapped_instance), std::move(mapped_proof), true});
    }
    return out;
}

std::pair<ReasoningInstance, Proof> make_width_instance(const ReasoningInstance& base,
                                                        const Proof& proof, int width,
                                                        const TransformConfig& cfg,
                                                        RandomStream& rng) {
    cfg.check();
    if (width < 0)
        throw std::invalid_argument("make_width_instance: negative width");
    if (base.meta.width_label != 0)
        throw std::invalid_argument("make_width_instance: base is not a width-0 instance");
    if (!is_valid(base, proof))
        throw std::invalid_argument("make_width_instance: base proof does not validate");

    std::set<std::string> domain = variables(base.goal);
    for (const Formula& a : base.assumptions) {
        std::set<std::string> more = variables(a);
        domain.insert(more.begin(), more.end());
    }

    std::vector<std::string> pool = draw_target_pool(cfg, rng);
    Substitution subst;
    for (const std::string& var : domain) {
        subst.set(var,
                  random_formula_exact_height(pool, width, rng, cfg.branch_probability));
    }

    auto [instance, mapped] = transform_instance(subst, base, proof);
    instance.meta.width_label = width;
    return {std::move(instance), std::move(mapped)};
}

}  // namespace hilbert
