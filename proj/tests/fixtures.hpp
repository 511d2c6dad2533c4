#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "repute/ingest.hpp"
#include "repute/reputation.hpp"

namespace fixtures {

// Ten-account sample: five bot accounts, five party accounts. Features are
// the published 2-decimal values (user, sentiment, content, temporal, bot);
// the reputation columns are the published 4-decimal values.
struct SampleRow {
    const char* handle;
    repute::AccountFeatures features;
    double r_active;       // 4-decimal R_A
    double r_passive_out;  // followers-net mean
    double r_passive_in;   // friends-net mean
    double r_passive;
    double r_total;
    bool is_bot;
};

inline const std::vector<SampleRow>& sample_rows() {
    static const std::vector<SampleRow> rows = {
        {"Bot_5", {0.02, 0.13, 0.04, 0.04, 0.02}, 0.0384, 0.4885, 0.7702, 0.6998, 0.2368, true},
        {"Bot_4", {0.04, 0.06, 0.13, 0.09, 0.02}, 0.0542, 0.5001, 0.7961, 0.7221, 0.2545, true},
        {"Bot_3", {0.03, 0.15, 0.10, 0.07, 0.04}, 0.0639, 0.2399, 0.8656, 0.7092, 0.2575, true},
        {"Bot_2", {0.04, 0.05, 0.30, 0.09, 0.02}, 0.0606, 0.2960, 0.9067, 0.7540, 0.2686, true},
        {"Bot_1", {0.04, 0.87, 0.29, 0.09, 0.02}, 0.1118, 0.3423, 0.8862, 0.7502, 0.3033, true},
        {"CiudadanosCs", {0.93, 0.95, 0.96, 0.87, 0.86}, 0.9130, 0.2837, 0.7775, 0.6540, 0.8353, false},
        {"PSOE", {0.94, 0.96, 0.97, 0.91, 0.92}, 0.9381, 0.3513, 0.7108, 0.6209, 0.8429, false},
        {"PODEMOS", {0.97, 0.95, 0.93, 0.87, 0.96}, 0.9362, 0.3352, 0.8189, 0.6980, 0.8648, false},
        {"vox_es", {0.98, 0.95, 0.95, 0.93, 0.97}, 0.9561, 0.3465, 0.7673, 0.6621, 0.8679, false},
        {"populares", {0.97, 0.95, 0.93, 0.94, 0.95}, 0.9481, 0.3158, 0.8446, 0.7124, 0.8774, false},
    };
    return rows;
}

/// The published features are 2-decimal roundings, so their geometric mean
/// lands near but not on the 4-decimal R_A column. Scaling all five features
/// by a common factor scales the geometric mean by the same factor, giving a
/// plausible un-rounded feature vector that hits the published R_A exactly.
inline repute::AccountFeatures exact_features(const SampleRow& row) {
    const double computed = repute::active_reputation(row.features);
    const double scale = row.r_active / computed;
    repute::AccountFeatures f = row.features;
    f.user *= scale;
    f.sentiment *= scale;
    f.content *= scale;
    f.temporal *= scale;
    f.bot *= scale;
    return f;
}

/// Full scoring fixture: the ten sample accounts with exact-R_A features,
/// each wired to one synthetic friend and one synthetic follower whose flat
/// feature vectors make the per-net means equal the published passive values.
inline std::vector<repute::AccountRecord> sample_population() {
    std::vector<repute::AccountRecord> accounts;
    for (const auto& row : sample_rows()) {
        repute::AccountRecord rec;
        rec.id = row.handle;
        rec.handle = row.handle;
        rec.features = exact_features(row);
        const std::string friend_id = std::string(row.handle) + "__friend";
        const std::string follower_id = std::string(row.handle) + "__follower";
        rec.friends = {friend_id};
        rec.followers = {follower_id};
        accounts.push_back(rec);

        // a flat feature vector has geometric mean equal to the value itself
        repute::AccountRecord fr;
        fr.id = friend_id;
        fr.handle = friend_id;
        fr.features = {row.r_passive_in, row.r_passive_in, row.r_passive_in,
                       row.r_passive_in, row.r_passive_in};
        accounts.push_back(fr);

        repute::AccountRecord fo;
        fo.id = follower_id;
        fo.handle = follower_id;
        fo.features = {row.r_passive_out, row.r_passive_out, row.r_passive_out,
                       row.r_passive_out, row.r_passive_out};
        accounts.push_back(fo);
    }
    return accounts;
}

}  // namespace fixtures
