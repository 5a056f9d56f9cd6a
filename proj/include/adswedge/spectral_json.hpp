#ifndef ADSWEDGE_SPECTRAL_JSON_HPP
#define ADSWEDGE_SPECTRAL_JSON_HPP

// Spectrum tables as JSON objects {"m": multiplicity}. Fock multiplicities
// are written as decimal strings so no precision is lost.

#include <adswedge/spectral.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace adswedge
{

inline nlohmann::json to_json(const OneParticleSpectrum& s)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [m, mu] : s.levels())
        j[std::to_string(m)] = mu;
    return j;
}

inline OneParticleSpectrum one_particle_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("spectrum table must be a JSON object");
    OneParticleSpectrum s;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        const long long m = std::stoll(key, &used);
        if (used != key.size())
            throw std::invalid_argument("spectrum key is not an integer: " + key);
        if (!value.is_number_integer())
            throw std::invalid_argument("multiplicity must be an integer");
        s.set(m, value.get<std::int64_t>());
    }
    return s;
}

inline nlohmann::json to_json(const FockSpectrum& f)
{
    nlohmann::json j = nlohmann::json::object();
    for (int m = 0; m <= f.cutoff(); ++m)
        j[std::to_string(m)] = f[m].str();
    return j;
}

// Keys must cover 0..cutoff; values are integers or decimal strings.
inline FockSpectrum fock_from_json(const nlohmann::json& j, Statistics stats)
{
    if (!j.is_object())
        throw std::invalid_argument("spectrum table must be a JSON object");
    std::vector<BigInt> levels(j.size());
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        const long long m = std::stoll(key, &used);
        if (used != key.size() || m < 0 || m >= static_cast<long long>(levels.size()))
            throw std::invalid_argument("Fock levels must be keyed 0..cutoff");
        if (value.is_string())
            levels[m] = BigInt(value.get<std::string>());
        else if (value.is_number_integer())
            levels[m] = value.get<std::int64_t>();
        else
            throw std::invalid_argument("multiplicity must be an integer or decimal string");
    }
    return FockSpectrum(stats, std::move(levels));
}

} // namespace adswedge

#endif // ADSWEDGE_SPECTRAL_JSON_HPP
