#pragma once

// Published reference values the reproduce-table command compares against,
// one block per table. Model rows carry a generator spec; real-network rows
// carry a dataset file looked up in --data-dir (missing files are skipped
// with a notice). Values are Spearman correlations as published, rounded to
// two decimals.

#include <vector>

#include "netcurv/analysis.hpp"

namespace netcurv {

struct ReferenceRow {
    const char* label;
    const char* spec;     // generator spec text (model rows) or nullptr
    const char* dataset;  // edge-list file name (real rows) or nullptr
    std::vector<double> published;
};

struct ReferenceTable {
    const char* name;
    Scope scope;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<ReferenceRow> rows;
};

inline const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = {
        {"I",
         Scope::EDGE,
         {{"or", "fr"}, {"or", "afr"}},
         {
             {"ER n=1000 p=0.003", "family=er n=1000 p=0.003", nullptr, {0.89, 0.90}},
             {"ER n=1000 p=0.007", "family=er n=1000 p=0.007", nullptr, {0.39, 0.43}},
             {"ER n=1000 p=0.01", "family=er n=1000 p=0.01", nullptr, {-0.03, 0.04}},
             {"WS n=1000 k=2 beta=0.5", "family=ws n=1000 k=2 beta=0.5", nullptr, {0.92, 0.92}},
             {"WS n=1000 k=8 beta=0.5", "family=ws n=1000 k=8 beta=0.5", nullptr, {0.18, 0.70}},
             {"WS n=1000 k=10 beta=0.5", "family=ws n=1000 k=10 beta=0.5", nullptr, {0.10, 0.69}},
             {"BA n=1000 m=2", "family=ba n=1000 m=2", nullptr, {0.74, 0.74}},
             {"BA n=1000 m=4", "family=ba n=1000 m=4", nullptr, {0.33, 0.36}},
             {"BA n=1000 m=5", "family=ba n=1000 m=5", nullptr, {0.13, 0.16}},
             {"HGG n=1000 k=3 gamma=2", "family=hgg n=1000 k=3 gamma=2 temperature=0", nullptr, {0.78, 0.66}},
             {"HGG n=1000 k=5 gamma=2", "family=hgg n=1000 k=5 gamma=2 temperature=0", nullptr, {0.82, 0.76}},
             {"HGG n=1000 k=10 gamma=2", "family=hgg n=1000 k=10 gamma=2 temperature=0", nullptr, {0.85, 0.87}},
             {"Autonomous systems", nullptr, "autonomous_systems.txt", {0.43, 0.42}},
             {"PGP", nullptr, "pgp.txt", {0.32, 0.83}},
             {"US Power Grid", nullptr, "us_power_grid.txt", {0.60, 0.76}},
             {"Astrophysics co-authorship", nullptr, "astrophysics_coauthorship.txt", {0.25, 0.70}},
             {"Chicago Road", nullptr, "chicago_road.txt", {0.98, 0.98}},
             {"Yeast protein interactions", nullptr, "yeast_protein.txt", {0.70, 0.74}},
             {"Euro Road", nullptr, "euro_road.txt", {0.81, 0.88}},
             {"Human protein interactions", nullptr, "human_protein.txt", {0.48, 0.52}},
             {"Hamsterster friendship", nullptr, "hamsterster_friendship.txt", {0.23, 0.30}},
             {"Email communication", nullptr, "email_communication.txt", {0.19, 0.53}},
             {"PDZ domain interactions", nullptr, "pdz_domain.txt", {0.72, 0.71}},
             {"Adjective-Noun adjacency", nullptr, "adjective_noun.txt", {0.15, 0.35}},
             {"Dolphin", nullptr, "dolphin.txt", {0.07, 0.71}},
             {"Contiguous US States", nullptr, "contiguous_us_states.txt", {0.68, 0.91}},
             {"Zachary karate club", nullptr, "zachary.txt", {0.75, 0.81}},
             {"Jazz musicians", nullptr, "jazz_musicians.txt", {0.11, 0.90}},
             {"Zebra", nullptr, "zebra.txt", {-0.04, 0.62}},
         }},
        {"II",
         Scope::VERTEX,
         {{"or", "fr"}, {"or", "afr"}},
         {
             {"ER n=1000 p=0.003", "family=er n=1000 p=0.003", nullptr, {0.97, 0.97}},
             {"ER n=1000 p=0.007", "family=er n=1000 p=0.007", nullptr, {0.97, 0.97}},
             {"ER n=1000 p=0.01", "family=er n=1000 p=0.01", nullptr, {0.96, 0.96}},
             {"WS n=1000 k=2 beta=0.5", "family=ws n=1000 k=2 beta=0.5", nullptr, {0.90, 0.90}},
             {"WS n=1000 k=8 beta=0.5", "family=ws n=1000 k=8 beta=0.5", nullptr, {0.80, 0.93}},
             {"WS n=1000 k=10 beta=0.5", "family=ws n=1000 k=10 beta=0.5", nullptr, {0.77, 0.92}},
             {"BA n=1000 m=2", "family=ba n=1000 m=2", nullptr, {0.61, 0.61}},
             {"BA n=1000 m=4", "family=ba n=1000 m=4", nullptr, {0.59, 0.60}},
             {"BA n=1000 m=5", "family=ba n=1000 m=5", nullptr, {0.63, 0.64}},
             {"HGG n=1000 k=3 gamma=2", "family=hgg n=1000 k=3 gamma=2 temperature=0", nullptr, {0.48, 0.57}},
             {"HGG n=1000 k=5 gamma=2", "family=hgg n=1000 k=5 gamma=2 temperature=0", nullptr, {0.34, 0.41}},
             {"HGG n=1000 k=10 gamma=2", "family=hgg n=1000 k=10 gamma=2 temperature=0", nullptr, {0.09, 0.13}},
             {"Autonomous systems", nullptr, "autonomous_systems.txt", {0.64, 0.64}},
             {"PGP", nullptr, "pgp.txt", {0.37, 0.74}},
             {"US Power Grid", nullptr, "us_power_grid.txt", {0.68, 0.82}},
             {"Astrophysics co-authorship", nullptr, "astrophysics_coauthorship.txt", {0.43, 0.78}},
             {"Chicago Road", nullptr, "chicago_road.txt", {0.96, 0.96}},
             {"Yeast protein interactions", nullptr, "yeast_protein.txt", {0.85, 0.92}},
             {"Euro Road", nullptr, "euro_road.txt", {0.90, 0.92}},
             {"Human protein interactions", nullptr, "human_protein.txt", {0.83, 0.84}},
             {"Hamsterster friendship", nullptr, "hamsterster_friendship.txt", {0.85, 0.86}},
             {"Email communication", nullptr, "email_communication.txt", {0.79, 0.86}},
             {"PDZ domain interactions", nullptr, "pdz_domain.txt", {0.91, 0.91}},
             {"Adjective-Noun adjacency", nullptr, "adjective_noun.txt", {0.47, 0.50}},
             {"Dolphin", nullptr, "dolphin.txt", {0.04, 0.49}},
             {"Contiguous US States", nullptr, "contiguous_us_states.txt", {0.61, 0.89}},
             {"Zachary karate club", nullptr, "zachary.txt", {0.24, 0.70}},
             {"Jazz musicians", nullptr, "jazz_musicians.txt", {-0.79, 0.01}},
             {"Zebra", nullptr, "zebra.txt", {-0.72, 0.99}},
         }},
        {"III",
         Scope::EDGE,
         {{"or", "ebc"},
          {"or", "embeddedness"},
          {"or", "dispersion"},
          {"fr", "ebc"},
          {"fr", "embeddedness"},
          {"fr", "dispersion"},
          {"afr", "ebc"},
          {"afr", "embeddedness"},
          {"afr", "dispersion"}},
         {
             {"ER n=1000 p=0.003", "family=er n=1000 p=0.003", nullptr,
              {-0.86, 0.08, 0.00, -0.81, -0.07, 0.00, -0.82, 0.04, 0.00}},
             {"ER n=1000 p=0.007", "family=er n=1000 p=0.007", nullptr,
              {-0.53, 0.25, 0.05, -0.80, -0.11, -0.03, -0.82, 0.06, 0.02}},
             {"ER n=1000 p=0.01", "family=er n=1000 p=0.01", nullptr,
              {-0.34, 0.32, 0.10, -0.76, -0.13, -0.05, -0.79, 0.07, 0.03}},
             {"WS n=1000 k=2 beta=0.5", "family=ws n=1000 k=2 beta=0.5", nullptr,
              {-0.75, 0.00, 0.00, -0.57, 0.00, 0.00, -0.57, 0.00, 0.00}},
             {"WS n=1000 k=8 beta=0.5", "family=ws n=1000 k=8 beta=0.5", nullptr,
              {-0.85, 0.79, 0.44, -0.52, -0.05, -0.08, -0.89, 0.68, 0.42}},
             {"WS n=1000 k=10 beta=0.5", "family=ws n=1000 k=10 beta=0.5", nullptr,
              {-0.87, 0.82, 0.49, -0.45, -0.05, -0.07, -0.89, 0.73, 0.47}},
             {"BA n=1000 m=2", "family=ba n=1000 m=2", nullptr,
              {-0.73, -0.09, -0.11, -0.76, -0.30, -0.16, -0.77, -0.26, -0.15}},
             {"BA n=1000 m=4", "family=ba n=1000 m=4", nullptr,
              {-0.45, 0.18, 0.14, -0.83, -0.48, -0.35, -0.84, -0.43, -0.33}},
             {"BA n=1000 m=5", "family=ba n=1000 m=5", nullptr,
              {-0.30, 0.30, 0.25, -0.85, -0.54, -0.41, -0.86, -0.48, -0.39}},
             {"HGG n=1000 k=3 gamma=2", "family=hgg n=1000 k=3 gamma=2 temperature=0", nullptr,
              {-0.47, -0.30, -0.15, -0.67, -0.04, -0.18, -0.76, 0.27, -0.07}},
             {"HGG n=1000 k=5 gamma=2", "family=hgg n=1000 k=5 gamma=2 temperature=0", nullptr,
              {-0.62, -0.20, -0.13, -0.73, -0.08, -0.17, -0.81, 0.20, -0.10}},
             {"HGG n=1000 k=10 gamma=2", "family=hgg n=1000 k=10 gamma=2 temperature=0", nullptr,
              {-0.78, -0.03, -0.06, -0.79, -0.15, -0.12, -0.87, 0.14, -0.08}},
             {"Autonomous systems", nullptr, "autonomous_systems.txt",
              {-0.17, -0.37, -0.25, -0.26, -0.44, -0.18, -0.27, -0.41, -0.16}},
             {"PGP", nullptr, "pgp.txt",
              {-0.64, 0.20, -0.13, 0.11, -0.69, -0.17, -0.56, 0.21, -0.15}},
             {"US Power Grid", nullptr, "us_power_grid.txt",
              {-0.61, 0.16, 0.06, -0.26, -0.41, -0.19, -0.45, 0.09, 0.04}},
             {"Astrophysics co-authorship", nullptr, "astrophysics_coauthorship.txt",
              {-0.78, 0.47, -0.16, -0.23, -0.58, -0.23, -0.63, 0.07, -0.27}},
             {"Chicago Road", nullptr, "chicago_road.txt",
              {-0.65, 0.00, 0.00, -0.65, 0.00, 0.00, -0.65, 0.00, 0.00}},
             {"Yeast protein interactions", nullptr, "yeast_protein.txt",
              {-0.83, 0.06, -0.01, -0.52, -0.15, -0.13, -0.59, 0.14, 0.00}},
             {"Euro Road", nullptr, "euro_road.txt",
              {-0.54, 0.05, 0.02, -0.40, -0.31, -0.07, -0.43, 0.00, 0.03}},
             {"Human protein interactions", nullptr, "human_protein.txt",
              {-0.46, 0.07, 0.01, -0.38, -0.22, -0.19, -0.43, -0.07, -0.10}},
             {"Hamsterster friendship", nullptr, "hamsterster_friendship.txt",
              {-0.53, 0.12, 0.00, -0.35, -0.61, -0.40, -0.42, -0.47, -0.32}},
             {"Email communication", nullptr, "email_communication.txt",
              {-0.61, 0.55, 0.24, -0.32, -0.45, -0.41, -0.57, 0.01, -0.16}},
             {"PDZ domain interactions", nullptr, "pdz_domain.txt",
              {-0.79, -0.04, 0.00, -0.55, -0.02, 0.00, -0.55, 0.06, 0.00}},
             {"Adjective-Noun adjacency", nullptr, "adjective_noun.txt",
              {-0.51, 0.22, 0.09, -0.42, -0.72, -0.55, -0.57, -0.42, -0.37}},
             {"Dolphin", nullptr, "dolphin.txt",
              {-0.66, 0.51, 0.28, 0.11, -0.58, -0.21, -0.61, 0.59, 0.31}},
             {"Contiguous US States", nullptr, "contiguous_us_states.txt",
              {-0.68, -0.10, -0.15, -0.49, -0.72, -0.71, -0.64, -0.03, -0.08}},
             {"Zachary karate club", nullptr, "zachary.txt",
              {-0.79, 0.10, -0.06, -0.64, -0.29, -0.37, -0.80, 0.43, 0.14}},
             {"Jazz musicians", nullptr, "jazz_musicians.txt",
              {-0.84, 0.57, -0.03, -0.22, -0.66, -0.18, -0.76, 0.47, -0.05}},
             {"Zebra", nullptr, "zebra.txt",
              {-0.94, 0.52, 0.13, 0.04, -0.71, -0.15, -0.65, 0.97, 0.09}},
         }},
        {"IV",
         Scope::VERTEX,
         {{"or", "degree"},
          {"or", "bc"},
          {"or", "cc"},
          {"fr", "degree"},
          {"fr", "bc"},
          {"fr", "cc"},
          {"afr", "degree"},
          {"afr", "bc"},
          {"afr", "cc"}},
         {
             {"ER n=1000 p=0.003", "family=er n=1000 p=0.003", nullptr,
              {-0.94, -0.94, -0.07, -0.94, -0.94, -0.13, -0.94, -0.94, -0.08}},
             {"ER n=1000 p=0.007", "family=er n=1000 p=0.007", nullptr,
              {-0.98, -0.98, -0.18, -0.99, -0.98, -0.26, -0.99, -0.98, -0.21}},
             {"ER n=1000 p=0.01", "family=er n=1000 p=0.01", nullptr,
              {-0.98, -0.98, -0.16, -0.99, -0.98, -0.25, -0.99, -0.98, -0.21}},
             {"WS n=1000 k=2 beta=0.5", "family=ws n=1000 k=2 beta=0.5", nullptr,
              {-0.71, -0.82, 0.00, -0.75, -0.73, 0.00, -0.75, -0.73, 0.00}},
             {"WS n=1000 k=8 beta=0.5", "family=ws n=1000 k=8 beta=0.5", nullptr,
              {-0.81, -0.96, 0.51, -0.98, -0.91, 0.05, -0.91, -0.98, 0.38}},
             {"WS n=1000 k=10 beta=0.5", "family=ws n=1000 k=10 beta=0.5", nullptr,
              {-0.79, -0.95, 0.57, -0.99, -0.91, 0.09, -0.92, -0.98, 0.41}},
             {"BA n=1000 m=2", "family=ba n=1000 m=2", nullptr,
              {-0.90, -0.90, -0.18, -0.59, -0.77, -0.39, -0.59, -0.78, -0.37}},
             {"BA n=1000 m=4", "family=ba n=1000 m=4", nullptr,
              {-0.94, -0.88, -0.08, -0.73, -0.84, -0.49, -0.73, -0.85, -0.45}},
             {"BA n=1000 m=5", "family=ba n=1000 m=5", nullptr,
              {-0.94, -0.90, -0.05, -0.78, -0.85, -0.40, -0.79, -0.86, -0.37}},
             {"HGG n=1000 k=3 gamma=2", "family=hgg n=1000 k=3 gamma=2 temperature=0", nullptr,
              {-0.28, -0.30, -0.14, -0.86, -0.60, -0.45, -0.79, -0.58, -0.37}},
             {"HGG n=1000 k=5 gamma=2", "family=hgg n=1000 k=5 gamma=2 temperature=0", nullptr,
              {-0.15, -0.17, -0.03, -0.89, -0.61, -0.21, -0.85, -0.60, -0.18}},
             {"HGG n=1000 k=10 gamma=2", "family=hgg n=1000 k=10 gamma=2 temperature=0", nullptr,
              {0.06, -0.06, 0.01, -0.93, -0.68, 0.31, -0.91, -0.66, 0.30}},
             {"Autonomous systems", nullptr, "autonomous_systems.txt",
              {-0.85, -0.70, -0.39, -0.51, -0.38, -0.55, -0.50, -0.38, -0.55}},
             {"PGP", nullptr, "pgp.txt",
              {-0.12, -0.49, 0.29, -0.73, -0.51, -0.51, -0.35, -0.46, -0.05}},
             {"US Power Grid", nullptr, "us_power_grid.txt",
              {-0.68, -0.80, 0.03, -0.79, -0.62, -0.49, -0.69, -0.68, -0.13}},
             {"Astrophysics co-authorship", nullptr, "astrophysics_coauthorship.txt",
              {-0.39, -0.72, 0.62, -0.95, -0.64, 0.25, -0.64, -0.66, 0.41}},
             {"Chicago Road", nullptr, "chicago_road.txt",
              {-0.33, -0.34, 0.00, -0.42, -0.42, 0.00, -0.42, -0.42, 0.00}},
             {"Yeast protein interactions", nullptr, "yeast_protein.txt",
              {-0.54, -0.67, -0.05, -0.57, -0.56, -0.33, -0.45, -0.54, -0.07}},
             {"Euro Road", nullptr, "euro_road.txt",
              {-0.82, -0.75, -0.22, -0.82, -0.64, -0.38, -0.80, -0.65, -0.24}},
             {"Human protein interactions", nullptr, "human_protein.txt",
              {-0.77, -0.78, -0.23, -0.71, -0.65, -0.43, -0.67, -0.64, -0.34}},
             {"Hamsterster friendship", nullptr, "hamsterster_friendship.txt",
              {-0.87, -0.87, -0.30, -0.92, -0.76, -0.45, -0.91, -0.76, -0.42}},
             {"Email communication", nullptr, "email_communication.txt",
              {-0.80, -0.88, 0.06, -0.97, -0.87, -0.31, -0.93, -0.88, -0.19}},
             {"PDZ domain interactions", nullptr, "pdz_domain.txt",
              {-0.50, -0.58, -0.12, -0.62, -0.64, -0.14, -0.61, -0.64, -0.09}},
             {"Adjective-Noun adjacency", nullptr, "adjective_noun.txt",
              {-0.57, -0.76, 0.07, -0.96, -0.84, -0.50, -0.95, -0.84, -0.45}},
             {"Dolphin", nullptr, "dolphin.txt",
              {-0.04, -0.39, 0.44, -0.98, -0.77, -0.45, -0.73, -0.72, -0.04}},
             {"Contiguous US States", nullptr, "contiguous_us_states.txt",
              {-0.59, -0.74, 0.71, -0.98, -0.82, 0.55, -0.78, -0.79, 0.70}},
             {"Zachary karate club", nullptr, "zachary.txt",
              {0.10, -0.09, 0.35, -0.84, -0.76, 0.40, -0.47, -0.60, 0.52}},
             {"Jazz musicians", nullptr, "jazz_musicians.txt",
              {0.78, 0.34, 0.08, -0.99, -0.72, 0.33, -0.49, -0.56, 0.56}},
             {"Zebra", nullptr, "zebra.txt",
              {0.78, 0.35, -0.33, -0.94, -0.73, 0.70, 0.76, 0.33, -0.31}},
         }},
    };
    return tables;
}

}  // namespace netcurv
