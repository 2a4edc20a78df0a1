"""Subcommand handlers."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

from wafix.analysis import analyze, classify_user_levels, join_pair_errors
from wafix.analysis.report import render_report, write_report_records
from wafix.cli.decorators import cli_command
from wafix.cli.io import (
    open_output,
    parallel_map,
    print_summary,
    read_model_file,
)
from wafix.cli.model import (
    AnalyzeCommand,
    ClassifyCommand,
    PairsCommand,
    ScoreCommand,
    StatsCommand,
)
from wafix.config.model import RunConfiguration
from wafix.config.util import load_intro_problems
from wafix.const import EXIT_FAILURE, EXIT_OK, OutputFormat
from wafix.diff import extract_changes
from wafix.ingest import pair_candidates, read_submission_log
from wafix.ingest.model import CodePair
from wafix.metrics import aggregate, error_counts, pair_statistics, render_stats
from wafix.metrics.model import PairStats
from wafix.model import write_records
from wafix.rules import (
    classify,
    dedup_per_pair,
    load_default_rules,
    load_rules_file,
    score_against_gold,
    summarize,
)
from wafix.rules.model import ErrorLabel, RuleSet

_LOGGER = logging.getLogger(__name__)

_WORKER_RULES: Optional[RuleSet] = None


def load_rule_set(path: Optional[Path]) -> RuleSet:
    """Load a rule file, or the shipped rules when no path is given."""
    if path is None:
        return load_default_rules()
    return load_rules_file(path)


def _init_classify_worker(rules_path: Optional[Path]) -> None:
    global _WORKER_RULES  # pylint: disable=global-statement
    _WORKER_RULES = load_rule_set(rules_path)


def _classify_pair(pair: CodePair) -> list[ErrorLabel]:
    assert _WORKER_RULES is not None
    change_set = extract_changes(pair)
    for warning in change_set.warnings:
        _LOGGER.debug("%s: %s", pair.pair_id, warning)
    return classify(change_set, _WORKER_RULES)


def _pair_statistics(item: tuple[CodePair, int]) -> PairStats:
    return pair_statistics(*item)


@cli_command(PairsCommand)
def cmd_pairs(command: PairsCommand, config: RunConfiguration) -> int:
    """Build the code pairs of a submission log."""
    log = read_submission_log(command.log)
    for error in log.errors:
        _LOGGER.warning("%s line %s: %s", command.log, error.line, error.message)

    kept: list[CodePair] = []
    dropped = 0
    for pair in pair_candidates(log.records):
        if pair.char_edit_distance < config.max_edit_distance:
            kept.append(pair)
        else:
            dropped += 1

    with open_output(command.output) as stream:
        write_records(stream, kept)
    print_summary(pairs=len(kept), dropped_distance=dropped)
    return EXIT_OK


@cli_command(ClassifyCommand)
def cmd_classify(command: ClassifyCommand, config: RunConfiguration) -> int:
    """Classify the errors of every code pair."""
    rule_set = load_rule_set(config.rules)
    pairs = read_model_file(command.pairs, CodePair)
    _LOGGER.info("classifying %s pairs with %s rules", len(pairs), len(rule_set))

    per_pair = parallel_map(
        _classify_pair,
        pairs,
        jobs=config.jobs,
        initializer=_init_classify_worker,
        initargs=(config.rules,),
    )
    labels = [label for pair_labels in per_pair for label in pair_labels]
    if command.dedup:
        labels = dedup_per_pair(summarize(labels, rule_set))

    with open_output(command.output) as stream:
        write_records(stream, labels)
    print_summary(pairs=len(pairs), labels=len(labels))
    return EXIT_OK


@cli_command(StatsCommand)
def cmd_stats(command: StatsCommand, config: RunConfiguration) -> int:
    """Compute the statistics of the code pairs and their errors."""
    pairs = read_model_file(command.pairs, CodePair)
    labels: list[ErrorLabel] = []
    if command.labels is not None:
        rule_set = load_rule_set(config.rules)
        labels = dedup_per_pair(
            summarize(read_model_file(command.labels, ErrorLabel), rule_set)
        )
    counts = error_counts(labels)
    stats = parallel_map(
        _pair_statistics,
        [(pair, counts.get(pair.pair_id, 0)) for pair in pairs],
        jobs=config.jobs,
    )
    corpus = aggregate(stats, config.std_ddof)

    with open_output(command.output) as stream:
        if config.output_format is OutputFormat.RECORDS:
            write_records(stream, [corpus])
        else:
            stream.write(render_stats(corpus))
    return EXIT_OK


@cli_command(AnalyzeCommand)
def cmd_analyze(command: AnalyzeCommand, config: RunConfiguration) -> int:
    """Report the errors whose frequency differs between novices and experts."""
    rule_set = load_rule_set(config.rules)
    labels = dedup_per_pair(
        summarize(read_model_file(command.labels, ErrorLabel), rule_set)
    )
    log = read_submission_log(command.log)
    for error in log.errors:
        _LOGGER.warning("%s line %s: %s", command.log, error.line, error.message)
    intro_problems = load_intro_problems(config.intro_problems)
    if not intro_problems:
        _LOGGER.warning(
            "no introductory problems given, only users without a solve are novices"
        )

    levels = classify_user_levels(log.records, intro_problems)
    report = analyze(join_pair_errors(labels, log.records, levels), config.alpha)

    with open_output(command.output) as stream:
        if config.output_format is OutputFormat.RECORDS:
            write_report_records(stream, report)
        else:
            stream.write(render_report(report))
    for problem in report.untestable:
        _LOGGER.info("problem %s untestable: %s", problem.problem_id, problem.reason)
    return EXIT_OK


@cli_command(ScoreCommand)
def cmd_score(command: ScoreCommand, config: RunConfiguration) -> int:
    """Score labels against hand labels."""
    result = score_against_gold(
        read_model_file(command.labels, ErrorLabel),
        read_model_file(command.gold, ErrorLabel),
    )
    if result.accuracy is None:
        print(f"correct={result.correct} total={result.total} accuracy=undefined")
        _LOGGER.error("no labels to score")
        return EXIT_FAILURE
    print(
        f"correct={result.correct} total={result.total} "
        f"accuracy={result.accuracy:.4f}"
    )
    return EXIT_OK
