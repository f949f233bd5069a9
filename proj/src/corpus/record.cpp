#include "screenbench/corpus/record.hpp"

#include "screenbench/error.hpp"

namespace screenbench::corpus {

std::string to_string(FeatureView view) {
    switch (view) {
    case FeatureView::AllFeatures: return "all";
    case FeatureView::TitleAbstract: return "title_abstract";
    case FeatureView::AbstractOnly: return "abstract";
    case FeatureView::TitleOnly: return "title";
    }
    return "?";
}

FeatureView feature_view_from_string(std::string_view name) {
    if (name == "all" || name == "all_features") return FeatureView::AllFeatures;
    if (name == "title_abstract") return FeatureView::TitleAbstract;
    if (name == "abstract") return FeatureView::AbstractOnly;
    if (name == "title") return FeatureView::TitleOnly;
    throw ValidationError("unknown feature view: " + std::string(name));
}

std::string compose_text(const DocumentRecord& record, FeatureView view) {
    const std::string* fields[4] = {};
    std::size_t count = 0;
    switch (view) {
    case FeatureView::AllFeatures:
        fields[count++] = &record.title;
        fields[count++] = &record.abstract;
        fields[count++] = &record.authors;
        fields[count++] = &record.journal;
        break;
    case FeatureView::TitleAbstract:
        fields[count++] = &record.title;
        fields[count++] = &record.abstract;
        break;
    case FeatureView::AbstractOnly:
        fields[count++] = &record.abstract;
        break;
    case FeatureView::TitleOnly:
        fields[count++] = &record.title;
        break;
    }
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        if (fields[i]->empty()) continue;
        if (!out.empty()) out.push_back(' ');
        out += *fields[i];
    }
    return out;
}

} // namespace screenbench::corpus
