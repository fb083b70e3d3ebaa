from __future__ import annotations

import pytest

import fuzzwrap as fw
from fixtures import CC_PAGES, cc_labels

REGULAR_SEED = 7
ANOMALY_SEED = 11


@pytest.fixture(scope="session")
def cc_model() -> fw.WrapperModel:
    return fw.train(CC_PAGES, cc_labels())


@pytest.fixture(scope="session")
def regular_corpus() -> fw.GoldCorpus:
    return fw.generate_corpus(fw.AnomalyProfile(), n_pages=10, seed=REGULAR_SEED)


@pytest.fixture(scope="session")
def regular_model(regular_corpus) -> fw.WrapperModel:
    pages = {p.page_id: p.html for p in regular_corpus.pages[:3]}
    labels = [p.labels for p in regular_corpus.pages[:3]]
    return fw.train(pages, labels)


@pytest.fixture(scope="session")
def anomaly_corpus() -> fw.GoldCorpus:
    profile = fw.AnomalyProfile(missing=0.2, permutation=0.2)
    return fw.generate_corpus(profile, n_pages=12, seed=ANOMALY_SEED)


@pytest.fixture(scope="session")
def tolerant_model(anomaly_corpus) -> fw.WrapperModel:
    pages = {p.page_id: p.html for p in anomaly_corpus.pages[:3]}
    labels = [p.labels for p in anomaly_corpus.pages[:3]]
    return fw.train(pages, labels, fw.WrapperConfig.tolerant())


@pytest.fixture(scope="session")
def fitted_baseline(anomaly_corpus) -> fw.DelimiterBaseline:
    pages = {p.page_id: p.html for p in anomaly_corpus.pages[:3]}
    labels = [p.labels for p in anomaly_corpus.pages[:3]]
    return fw.DelimiterBaseline.fit(pages, labels)
