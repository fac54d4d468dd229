import numpy as np
import pytest

from figdesc.errors import EmbeddingFormatError, OovError, SchemaError
from figdesc.lexres import (
    EmbeddingStore,
    candidate_verb_lemmas,
    load_embeddings,
    load_synsets,
)


class TestSynsets:
    SRC = '{"depict": [["show", "depict"], ["illustrate", "depict", "render"]]}'

    def test_synonyms_union_drops_self(self):
        lex = load_synsets(self.SRC)
        assert lex.synonyms("depict") == {"show", "illustrate", "render"}

    def test_ordered_synonyms(self):
        lex = load_synsets(self.SRC)
        assert lex.ordered_synonyms("depict") == ["show", "illustrate", "render"]

    def test_lookup_case_folds(self):
        lex = load_synsets(self.SRC)
        assert lex.synonyms("Depict") == lex.synonyms("depict")

    def test_missing_lemma_is_empty(self):
        lex = load_synsets(self.SRC)
        assert lex.synonyms("vanish") == set()
        assert lex.ordered_synonyms("vanish") == []

    def test_uppercase_key_rejected(self):
        with pytest.raises(SchemaError, match="lowercase"):
            load_synsets('{"Depict": [["show"]]}')

    def test_uppercase_member_rejected(self):
        with pytest.raises(SchemaError, match="lowercase"):
            load_synsets('{"depict": [["Show"]]}')

    def test_empty_synset_rejected(self):
        with pytest.raises(SchemaError, match="empty"):
            load_synsets('{"depict": [[]]}')

    def test_malformed_json_reports_offset(self):
        with pytest.raises(SchemaError, match="offset"):
            load_synsets('{"depict": ')

    def test_non_object_rejected(self):
        with pytest.raises(SchemaError, match="object"):
            load_synsets("[1, 2]")


def store(rows):
    text = f"{len(rows)} {len(rows[0]) - 1}\n" + "\n".join(
        " ".join(str(c) for c in row) for row in rows
    )
    return load_embeddings(text)


class TestEmbeddings:
    def test_vector_roundtrip(self):
        st = store([("a", 1, 0), ("b", 0, 1)])
        assert st.dim == 2
        assert len(st) == 2
        assert "a" in st and "z" not in st
        np.testing.assert_allclose(st.vector("a"), [1.0, 0.0])

    def test_cosine(self):
        st = store([("a", 1, 0), ("b", 0, 1), ("c", 1, 1)])
        assert st.cosine("a", "b") == pytest.approx(0.0)
        assert st.cosine("a", "c") == pytest.approx(1 / np.sqrt(2))
        assert st.cosine("a", "a") == pytest.approx(1.0)

    def test_top_k_order_and_exclusion(self):
        st = store([("q", 1, 0), ("near", 0.9, 0.1), ("far", -1, 0), ("mid", 1, 1)])
        got = st.top_k("q", 2)
        assert [w for w, _ in got] == ["near", "mid"]
        assert all(w != "q" for w, _ in st.top_k("q", 10))

    def test_top_k_tie_breaks_lexicographically(self):
        st = store([("q", 1, 0), ("bb", 2, 0), ("aa", 3, 0), ("cc", 0, 1)])
        # aa and bb are both at cosine 1.0
        assert [w for w, _ in st.top_k("q", 2)] == ["aa", "bb"]

    def test_oov_raises(self):
        st = store([("a", 1, 0)])
        with pytest.raises(OovError, match="zorp"):
            st.vector("zorp")
        with pytest.raises(OovError):
            st.top_k("zorp", 3)

    def test_zero_vector_is_similar_to_nothing(self):
        st = store([("z", 0, 0), ("a", 1, 0)])
        assert st.cosine("z", "a") == 0.0
        (row,) = st.top_k("z", 1)
        assert row[1] == pytest.approx(0.0)

    def test_duplicate_keeps_last(self, caplog):
        text = "2 2\nw 1 0\nw 0 1\n"
        with caplog.at_level("WARNING"):
            st = load_embeddings(text)
        np.testing.assert_allclose(st.vector("w"), [0.0, 1.0])
        assert "duplicate" in caplog.text

    def test_bad_header(self):
        with pytest.raises(EmbeddingFormatError, match="line 1"):
            load_embeddings("just-one-token\n")
        with pytest.raises(EmbeddingFormatError, match="two integers"):
            load_embeddings("a b\n")

    def test_wrong_column_count_names_line(self):
        with pytest.raises(EmbeddingFormatError, match="line 3"):
            load_embeddings("2 2\na 1 0\nb 1\n")

    def test_non_numeric_names_line(self):
        with pytest.raises(EmbeddingFormatError, match="line 2"):
            load_embeddings("1 2\na x y\n")

    def test_non_finite_rejected(self):
        with pytest.raises(EmbeddingFormatError, match="non-finite"):
            load_embeddings("1 2\na inf 0\n")


class TestVerbExpansion:
    SYNS = '{"escalate": [["increase", "escalate", "surge"], ["climb", "escalate"]]}'

    def test_intersection_in_embedding_rank_order(self):
        lex = load_synsets(self.SYNS)
        st = store(
            [
                ("escalate", 1.0, 0.0),
                ("climb", 0.99, 0.05),
                ("increase", 0.9, 0.1),
                ("surge", -1.0, 0.0),
                ("noise", 0.95, 0.0),
            ]
        )
        # surge is a synonym but too far away to make top-3
        assert candidate_verb_lemmas(lex, st, "escalate", k=3) == ["climb", "increase"]

    def test_oov_verb_falls_back_to_synset_order(self):
        lex = load_synsets(self.SYNS)
        st = store([("increase", 1, 0)])
        assert candidate_verb_lemmas(lex, st, "escalate") == [
            "increase",
            "surge",
            "climb",
        ]

    def test_no_synonyms_yields_nothing(self):
        lex = load_synsets("{}")
        st = store([("mumble", 1, 0), ("talk", 0.9, 0.1)])
        assert candidate_verb_lemmas(lex, st, "mumble") == []

    def test_fixture_resources_resolve_show_family(self, resources):
        got = candidate_verb_lemmas(resources.synsets, resources.embeddings, "depict")
        assert got, "expansion of a known synonym cluster came back empty"
        assert "show" in got
