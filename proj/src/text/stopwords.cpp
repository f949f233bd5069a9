#include "screenbench/text/stopwords.hpp"

#include <fstream>

#include "screenbench/error.hpp"

namespace screenbench::text {

namespace {

// Keep in sync with data/stopwords_en.txt; a unit test checks equality.
const char* const kEnglishStopwords[] = {
    "a", "about", "above", "across", "after", "again", "against", "all", "almost",
    "alone", "along", "already", "also", "although", "always", "am", "among", "amongst",
    "an", "and", "another", "any", "anybody", "anyone", "anything", "anywhere",
    "are", "around", "as", "at", "b", "be", "became", "because", "become", "becomes",
    "been", "before", "behind", "being", "below", "beside", "besides", "between",
    "beyond", "both", "but", "by", "c", "can", "cannot", "could", "d", "did", "do",
    "does", "done", "down", "during", "e", "each", "either", "else", "elsewhere",
    "enough", "etc", "even", "ever", "every", "everybody", "everyone", "everything",
    "everywhere", "except", "f", "far", "few", "for", "former", "formerly", "from",
    "further", "furthermore", "g", "h", "had", "has", "have", "he", "hence", "her",
    "here", "hereafter", "hereby", "herein", "hereupon", "hers", "herself", "him",
    "himself", "his", "how", "however", "i", "if", "in", "indeed", "instead", "into",
    "is", "it", "its", "itself", "j", "just", "k", "l", "latter", "latterly", "least",
    "less", "m", "may", "me", "meanwhile", "might", "more", "moreover", "most",
    "mostly", "much", "must", "my", "myself", "n", "namely", "neither", "never",
    "nevertheless", "next", "no", "nobody", "none", "noone", "nor", "not", "nothing",
    "now", "nowhere", "o", "of", "off", "often", "on", "once", "one", "only", "onto",
    "or", "other", "others", "otherwise", "our", "ours", "ourselves", "out", "over",
    "own", "p", "per", "perhaps", "q", "quite", "r", "rather", "s", "same", "seem",
    "seemed", "seeming", "seems", "several", "shall", "she", "should", "since",
    "so", "some", "somebody", "somehow", "someone", "something", "sometime", "sometimes",
    "somewhere", "still", "such", "t", "than", "that", "the", "their", "theirs",
    "them", "themselves", "then", "thence", "there", "thereafter", "thereby", "therefore",
    "therein", "thereupon", "these", "they", "this", "those", "though", "through",
    "throughout", "thru", "thus", "to", "together", "too", "toward", "towards",
    "u", "under", "until", "up", "upon", "us", "v", "very", "via", "w", "was",
    "we", "were", "what", "whatever", "when", "whence", "whenever", "where", "whereafter",
    "whereas", "whereby", "wherein", "whereupon", "wherever", "whether", "which",
    "while", "whither", "who", "whoever", "whole", "whom", "whose", "why", "will",
    "with", "within", "without", "would", "x", "y", "yet", "you", "your", "yours",
    "yourself", "yourselves", "z",
};

} // namespace

std::unordered_set<std::string> load_stoplist(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open stoplist: " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty())
            words.insert(line);
    }
    return words;
}

const std::unordered_set<std::string>& default_stoplist() {
    static const std::unordered_set<std::string> words(std::begin(kEnglishStopwords),
                                                       std::end(kEnglishStopwords));
    return words;
}

} // namespace screenbench::text
