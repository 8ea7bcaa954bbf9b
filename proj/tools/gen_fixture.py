#!/usr/bin/env python3
"""Generate the bundled desk-scale fixture (25 users / 122 sites / 366 triples).

Writes, relative to the repository root:
  data/corpus_tr.txt        word<TAB>frequency corpus sample
  data/suffixes_tr.txt      suffix table (same content as the built-in default)
  data/thesaurus_tr.tsv     synonym lexicon with planted cross-user pairs
  data/fixture/raw_triples.tsv   noisy input rows for the pipeline
  data/fixture/acceptance.tsv    sample evaluation counts (20 users, sum 72 of 100)

The script mirrors the engine's lowercase / spell-check / stem / URL rules so
every planted noise row provably round-trips to its intended clean triple; it
asserts the full simulated pipeline output before writing anything.

Deterministic: fixed seed, sorted iteration everywhere it matters.
"""

import random
import sys
from pathlib import Path

SEED = 20230823
ROOT = Path(__file__).resolve().parent.parent
ALPHABET = "abcçdefgğhıijklmnoöprsştuüvyz"

SUFFIXES = [
    "lar", "ler",
    "de", "da", "te", "ta", "den", "dan",
    "e", "a", "i", "ı", "u", "ü",
    "im", "ım", "um", "üm", "in", "ın", "un", "ün",
    "si", "sı", "su", "sü",
]

LOWER_MAP = {"İ": "i", "I": "ı", "Ç": "ç", "Ğ": "ğ", "Ö": "ö", "Ş": "ş", "Ü": "ü"}


def turkish_lower(s):
    out = []
    for ch in s:
        if ch in LOWER_MAP:
            out.append(LOWER_MAP[ch])
        elif "A" <= ch <= "Z":
            out.append(chr(ord(ch) + 32))
        else:
            out.append(ch)
    return "".join(out)


def turkish_upper(s):
    rev = {v: k for k, v in LOWER_MAP.items()}
    out = []
    for ch in s:
        if ch in rev:
            out.append(rev[ch])
        elif "a" <= ch <= "z":
            out.append(chr(ord(ch) - 32))
        else:
            out.append(ch)
    return "".join(out)


def collate_key(word):
    return [ALPHABET.index(c) if c in ALPHABET else 1000 + ord(c) for c in word]


def edits1(word):
    out = set()
    n = len(word)
    for i in range(n + 1):
        for c in ALPHABET:
            out.add(word[:i] + c + word[i:])
        if i == n:
            continue
        if n > 1:
            out.add(word[:i] + word[i + 1:])
        for c in ALPHABET:
            if c != word[i]:
                out.add(word[:i] + c + word[i + 1:])
        if i + 1 < n and word[i] != word[i + 1]:
            out.add(word[:i] + word[i + 1] + word[i] + word[i + 2:])
    out.discard(word)
    return out


def spell_correct(word, corpus):
    if word in corpus:
        return word, False
    candidates = [w for w in edits1(word) if w in corpus]
    if not candidates:
        return word, False
    candidates.sort(key=lambda w: (-corpus[w], collate_key(w)))
    return candidates[0], True


def sorted_suffixes():
    return sorted(SUFFIXES, key=lambda s: (-len(s), s.encode("utf-8")))


def stem(word, corpus):
    table = sorted_suffixes()
    while True:
        in_corpus = word in corpus
        stripped = False
        for suf in table:
            if len(suf) >= len(word):
                continue
            if len(word) - len(suf) < 2:
                continue
            if not word.endswith(suf):
                continue
            candidate = word[: len(word) - len(suf)]
            if in_corpus and candidate not in corpus:
                continue  # veto
            word = candidate
            stripped = True
            break
        if not stripped:
            return word


INDEX_NAMES = ("index.html", "index.htm", "index.php", "default.asp", "default.aspx")


def normalize_url(raw):
    url = raw.strip()
    if "#" in url:
        url = url[: url.index("#")]
    for scheme in ("https://", "http://"):
        if url.lower().startswith(scheme):
            url = url[len(scheme):]
            break
    host_end = url.find("/")
    if host_end == -1:
        host_end = len(url)
    url = url[:host_end].lower() + url[host_end:]
    if url.startswith("www."):
        url = url[4:]
    while True:
        before = url
        url = url.rstrip("/")
        slash = url.rfind("/")
        if slash != -1 and url[slash + 1:].lower() in INDEX_NAMES:
            url = url[:slash]
        if url == before:
            break
    assert url, f"url vanished: {raw!r}"
    return url


# ---------------------------------------------------------------------------
# Vocabulary. Synonym clusters first (planted so expansion fires), then
# filler tag words, then extra corpus-only words.

SYNONYM_CLUSTERS = [
    ("haber", "duyuru"), ("kitap", "eser"), ("araba", "otomobil"),
    ("ev", "konut"), ("film", "sinema"), ("yemek", "aş"),
    ("okul", "mektep"), ("şehir", "kent"), ("doktor", "hekim"),
    ("öğrenci", "talebe"), ("misafir", "konuk"), ("cevap", "yanıt"),
    ("örnek", "misal"), ("dil", "lisan"), ("fiyat", "paha"),
]

FILLER_TAGS = [
    "spor", "müzik", "oyun", "teknoloji", "bilim", "sanat", "tarih",
    "gezi", "moda", "sağlık", "eğitim", "ekonomi", "siyaset", "doğa",
    "fotoğraf", "tasarım", "yazılım", "donanım", "futbol", "basketbol",
    "tiyatro", "şiir", "roman", "mimari", "psikoloji", "felsefe",
    "matematik", "fizik", "kimya", "biyoloji", "astronomi", "denizcilik",
    "bahçe", "kahve", "çay", "tarif", "alışveriş", "borsa", "hukuk",
    "medya", "radyo", "televizyon", "belgesel", "animasyon", "karikatür",
]

EXTRA_CORPUS_WORDS = [
    "su", "göz", "gün", "yol", "deniz", "dağ", "orman", "çiçek", "kuş",
    "masa", "kapı", "pencere", "bilgisayar", "telefon", "internet",
    "gazete", "dergi", "makale", "video", "resim", "harita", "sözlük",
    "ansiklopedi", "kütüphane", "müze", "park", "köprü", "istasyon",
]

USERS = [
    "ahmet", "ayse", "baran", "burcu", "can", "ceren", "deniz", "derya",
    "ediz", "elif", "emre", "fatma", "gul", "hakan", "irem", "kemal",
    "leyla", "mehmet", "nazli", "omer", "pinar", "selin", "tolga",
    "umut", "zeynep",
]

ASCII_MAP = str.maketrans("çğıöşü", "cgiosu")


def main():
    rng = random.Random(SEED)

    tags = [w for pair in SYNONYM_CLUSTERS for w in pair] + FILLER_TAGS
    assert len(tags) == len(set(tags))

    corpus = {}
    for i, word in enumerate(tags):
        corpus[word] = 200 + (i * 37) % 800
    for i, word in enumerate(EXTRA_CORPUS_WORDS):
        corpus[word] = 50 + (i * 13) % 200

    # every tag must be a fixed point of the stemmer
    for tag in tags:
        assert stem(tag, corpus) == tag, f"tag {tag!r} is not a stem fixed point"

    # 122 sites named after ascii-folded words
    site_words = (tags + EXTRA_CORPUS_WORDS) * 3
    sites = []
    for i in range(122):
        base = site_words[i].translate(ASCII_MAP)
        suffix = "" if i < len(set(site_words)) else str(i)
        path = "/blog" if i % 9 == 4 else ""
        sites.append(f"{base}{suffix}{i % 7}.com{path}")
    assert len(sites) == len(set(sites))

    # 366 distinct triples covering all users and all sites
    triples = set()
    for i, site in enumerate(sites):  # guarantee site coverage
        triples.add((USERS[i % 25], site, tags[i % len(tags)]))
    while len(triples) < 366:
        triples.add((rng.choice(USERS), rng.choice(sites), rng.choice(tags)))
    triples = sorted(triples)
    assert len({u for u, _, _ in triples}) == 25
    assert len({s for _, s, _ in triples}) == 122

    # noisy raw rows ------------------------------------------------------
    inflected_forms = {}  # noisy tag -> clean tag

    def inflect(tag):
        # candidate inflections whose simulated round trip hits the tag
        for suf in ("ler", "lar", "de", "da"):
            form = tag + suf
            if form in corpus or form in inflected_forms:
                continue
            trial = dict(corpus)
            trial[form] = 1
            if stem(form, trial) == tag:
                return form
        return None

    def misspell(tag):
        options = sorted(edits1(tag))
        rng.shuffle(options)
        for e in options[:40]:
            if e in corpus:
                continue
            fixed, corrected = spell_correct(e, corpus)
            if corrected and fixed == tag:
                return e
        return None

    def decorate_url(site):
        scheme = rng.choice(["", "", "http://", "https://", "HTTP://"])
        www = rng.choice(["", "", "www.", "WWW."])
        slash_pos = site.find("/")
        host = site if slash_pos == -1 else site[:slash_pos]
        path = "" if slash_pos == -1 else site[slash_pos:]
        if rng.random() < 0.3:
            host = host.upper()
        tail = rng.choice(["", "", "/", "/index.html"])
        return f"{scheme}{www}{host}{path}{tail}"

    raw_rows = []
    for user, site, tag in triples:
        roll = rng.random()
        noisy_tag = tag
        if roll < 0.12:
            form = inflect(tag)
            if form:
                inflected_forms[form] = tag
                corpus[form] = 1
                noisy_tag = form
        elif roll < 0.20:
            e = misspell(tag)
            if e:
                noisy_tag = e
        elif roll < 0.45:
            noisy_tag = turkish_upper(tag)
        raw_rows.append((user, decorate_url(site), noisy_tag))

    # duplicate spellings of existing triples, to exercise dedup
    for user, site, tag in rng.sample(triples, 12):
        raw_rows.append((user, decorate_url(site), tag))
    rng.shuffle(raw_rows)

    # re-check fixed points now that inflected forms joined the corpus
    for tag in tags:
        assert stem(tag, corpus) == tag, f"corpus change broke fixed point {tag!r}"

    # simulate the full pipeline and require an exact round trip
    simulated = set()
    for user, url, noisy_tag in raw_rows:
        t = turkish_lower(noisy_tag.strip())
        t, _ = spell_correct(t, corpus)
        t = stem(t, corpus)
        simulated.add((user.strip(), normalize_url(url), t))
    assert simulated == set(triples), (
        f"round trip mismatch: {len(simulated)} vs {len(triples)}; "
        f"extra={sorted(simulated - set(triples))[:5]} "
        f"missing={sorted(set(triples) - simulated)[:5]}"
    )

    # thesaurus: planted clusters (both directions) plus corpus-only noise
    thesaurus = {}
    for a, b in SYNONYM_CLUSTERS:
        thesaurus.setdefault(a, []).append(b)
        thesaurus.setdefault(b, []).append(a)
    for i in range(0, len(EXTRA_CORPUS_WORDS) - 1, 2):
        thesaurus.setdefault(EXTRA_CORPUS_WORDS[i], []).append(EXTRA_CORPUS_WORDS[i + 1])

    # expansion must fire: some synonym of a used tag is itself a used tag
    used_tags = {t for _, _, t in triples}
    assert any(
        s in used_tags for w, syns in thesaurus.items() if w in used_tags for s in syns
    )

    # write everything -----------------------------------------------------
    data = ROOT / "data"
    (data / "fixture").mkdir(parents=True, exist_ok=True)

    with open(data / "corpus_tr.txt", "w", encoding="utf-8") as f:
        for word in sorted(corpus):
            f.write(f"{word}\t{corpus[word]}\n")

    with open(data / "suffixes_tr.txt", "w", encoding="utf-8") as f:
        f.write("# Turkish inflectional suffixes, one per line.\n")
        f.write("# plural\nlar\nler\n")
        f.write("# case\nde\nda\nte\nta\nden\ndan\ne\na\ni\nı\nu\nü\n")
        f.write("# possessive\nim\nım\num\nüm\nin\nın\nun\nün\nsi\nsı\nsu\nsü\n")

    with open(data / "thesaurus_tr.tsv", "w", encoding="utf-8") as f:
        for word in sorted(thesaurus):
            f.write(f"{word}\t{','.join(sorted(thesaurus[word]))}\n")

    with open(data / "fixture" / "raw_triples.tsv", "w", encoding="utf-8") as f:
        for user, url, tag in raw_rows:
            f.write(f"{user}\t{url}\t{tag}\n")

    accepted = [5, 5, 5, 4, 4, 4, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3, 3, 2, 2]
    assert sum(accepted) == 72
    with open(data / "fixture" / "acceptance.tsv", "w", encoding="utf-8") as f:
        for user, count in zip(USERS[:20], accepted):
            f.write(f"{user}\t{count}\t5\n")

    print(f"fixture written: {len(raw_rows)} raw rows -> "
          f"{len(triples)} triples, {len(sites)} sites, {len(USERS)} users")


if __name__ == "__main__":
    sys.exit(main())
