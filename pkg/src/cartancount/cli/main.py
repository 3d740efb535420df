"""
[CC-H001] cartancount.cli.main
Typer CLI 엔트리포인트 - 카르탄 부분대수 켤레류 세기

종료 코드: 0 성공, 1 가드 거부/검증 실패, 2 사용법·형식 오류.
결과는 stdout, 로그와 오류는 stderr 로만 나갑니다.

version: 1.1.0
created: 2026-10-17
modified: 2026-10-17
dependencies: typer>=0.23.1, rich>=14.3.2, structlog>=25.5
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Annotated, Any

import structlog
import typer
from rich.console import Console
from rich.table import Table

from cartancount import __version__
from cartancount.classify.pipeline import classify_spectra, count_cartan_classes, verify_formulas
from cartancount.classify.report import CSV_COLUMNS, ClassificationReport, report_to_csv_rows
from cartancount.core.config import CartanCountConfig, GuardConfig, configure_logging, load_config
from cartancount.core.exceptions import CartanCountError, GuardExceededError
from cartancount.core.types import CheckStatus, OutputFormat
from cartancount.graphs.construct import graph_from_matrix
from cartancount.graphs.dot import graph_to_json, to_dot
from cartancount.matrices.textio import format_matrix
from cartancount.permutations.models import Params
from cartancount.permutations.oracle import double_coset_classes
from cartancount.permutations.textio import format_permutation

logger = structlog.get_logger()

app = typer.Typer(
    name="cartancount",
    help="차원 강하 대수 I_{m,n,o}의 비퇴화 카르탄 부분대수 켤레류를 셉니다",
    no_args_is_help=True,
    rich_markup_mode="rich",
)

console = Console(highlight=False)
err_console = Console(stderr=True)

# 공통 옵션
MOpt = Annotated[int, typer.Option("--m", min=1, help="파라미터 m")]
NOpt = Annotated[int, typer.Option("--n", min=1, help="파라미터 n")]
OOpt = Annotated[int, typer.Option("--o", min=1, help="파라미터 o")]
OutputOpt = Annotated[
    OutputFormat, typer.Option("--output", case_sensitive=False, help="출력 형식")
]
TransposeOpt = Annotated[
    bool,
    typer.Option("--transpose/--no-transpose", help="정사각 행렬의 전치(뒤집기)를 합동에 포함"),
]
ForceOpt = Annotated[bool, typer.Option("--force", help="크기 가드 무시")]


def version_callback(value: bool) -> None:  # [CC-H001.1]
    """버전 정보를 출력합니다."""
    if value:
        console.print(f"cartancount v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    log_level: Annotated[str, typer.Option("--log-level", help="stderr 로그 레벨")] = "",
    config_file: Annotated[
        Path | None, typer.Option("--config", help="YAML 설정 파일 (기본 cartancount.yaml)")
    ] = None,
    version: Annotated[
        bool | None,
        typer.Option(
            "--version", "-V", help="버전 정보 출력", callback=version_callback, is_eager=True
        ),
    ] = None,
) -> None:
    """M(mo,n,no,m) 합동류 열거, 이중 잉여류 오라클, 스펙트럼 분류."""
    config = load_config(config_file)
    if log_level:
        config = config.model_copy(update={"log_level": log_level})
    configure_logging(config.log_level)
    ctx.obj = config


def _guards(ctx: typer.Context, force: bool) -> GuardConfig:
    config: CartanCountConfig = ctx.obj or CartanCountConfig()
    if force:
        return config.guards.model_copy(update={"force": True})
    return config.guards


def _emit(text: str) -> None:
    typer.echo(text, nl=False)


def _emit_json(data: Any) -> None:
    typer.echo(json.dumps(data, ensure_ascii=False, indent=2, sort_keys=False))


def _emit_csv(rows: list[list[str]]) -> None:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    _emit(buffer.getvalue())


def _fail(error: CartanCountError) -> typer.Exit:
    """가드 거부는 1, 나머지 입력 오류는 2."""
    err_console.print(f"오류: {error}", style="red")
    if isinstance(error, GuardExceededError):
        logger.warning("command_refused", bound=error.bound, limit=error.limit, value=error.value)
        return typer.Exit(1)
    return typer.Exit(2)


def _report(
    ctx: typer.Context,
    params: tuple[int, int, int],
    transpose: bool,
    force: bool,
    *,
    oracle: bool,
) -> ClassificationReport:
    try:
        return count_cartan_classes(
            Params(*params),
            allow_transpose=transpose,
            guards=_guards(ctx, force),
            with_oracle=oracle,
        )
    except CartanCountError as e:
        raise _fail(e) from e


def _count_row(report: ClassificationReport) -> list[str]:
    p = report.params
    formula = report.formula
    if formula is None:
        status = CheckStatus.SKIP
    else:
        status = CheckStatus.PASS if report.consistent else CheckStatus.FAIL
    values = (
        p.m,
        p.n,
        p.o,
        report.class_count,
        report.oracle_count,
        formula.name if formula else None,
        formula.expected if formula else None,
    )
    return [*("" if v is None else str(v) for v in values), status.value]


@app.command()  # [CC-H001.2]
def count(
    ctx: typer.Context,
    m: MOpt,
    n: NOpt,
    o: OOpt,
    output: OutputOpt = OutputFormat.TEXT,
    transpose: TransposeOpt = True,
    force: ForceOpt = False,
) -> None:
    """켤레류(= 합동류) 개수를 출력합니다.

    예시: cartancount count --m 2 --n 2 --o 1
    """
    report = _report(ctx, (m, n, o), transpose, force, oracle=output is not OutputFormat.TEXT)
    if output is OutputFormat.JSON:
        _emit_json(report.to_json())
    elif output is OutputFormat.CSV:
        _emit_csv([list(CSV_COLUMNS), _count_row(report)])
    else:
        typer.echo(str(report.class_count))


@app.command()  # [CC-H001.3]
def classes(
    ctx: typer.Context,
    m: MOpt,
    n: NOpt,
    o: OOpt,
    output: OutputOpt = OutputFormat.TEXT,
    transpose: TransposeOpt = True,
    force: ForceOpt = False,
    witness: Annotated[bool, typer.Option("--witness", help="류마다 들어올린 순열도 출력")] = False,
) -> None:
    """류마다 표준 대표 행렬을 출력합니다 (행렬 텍스트 형식, 빈 줄로 구분)."""
    report = _report(ctx, (m, n, o), transpose, force, oracle=output is OutputFormat.JSON)
    if output is OutputFormat.JSON:
        data = report.to_json()
        if witness:
            for idx, entry in enumerate(data["classes"]):
                entry["witness"] = [y + 1 for y in report.witness(idx).images]
        _emit_json(data)
        return
    if output is OutputFormat.CSV:
        rows = [["index", "rows", "cols", "entries"]]
        for idx, entry in enumerate(report.classes, start=1):
            canonical = entry.key.canonical
            rows.append(
                [
                    str(idx),
                    str(canonical.rows),
                    str(canonical.cols),
                    " ".join(map(str, canonical.entries)),
                ]
            )
        _emit_csv(rows)
        return
    blocks = []
    for idx, entry in enumerate(report.classes):
        text = format_matrix(entry.key.canonical)
        if witness:
            text += format_permutation(report.witness(idx))
        blocks.append(text)
    _emit("\n".join(blocks))


@app.command()  # [CC-H001.4]
def spectra(
    ctx: typer.Context,
    m: MOpt,
    n: NOpt,
    o: OOpt,
    output: OutputOpt = OutputFormat.TEXT,
    transpose: TransposeOpt = True,
    force: ForceOpt = False,
) -> None:
    """합동류를 스펙트럼 위상동형 지문으로 묶어 출력합니다."""
    try:
        groups = classify_spectra(
            Params(m, n, o), allow_transpose=transpose, guards=_guards(ctx, force)
        )
    except CartanCountError as e:
        raise _fail(e) from e
    if output is OutputFormat.JSON:
        _emit_json(
            [
                {
                    "homeo": {
                        "circles": homeo.circle_count,
                        "core": {
                            "vertices": homeo.core.vertex_count,
                            "edges": [list(edge) for edge in homeo.core.edges],
                        },
                    },
                    "classes": [key.canonical.to_rows() for key in keys],
                }
                for homeo, keys in groups.items()
            ]
        )
        return
    rows = [
        [
            str(homeo.circle_count),
            str(homeo.core.vertex_count),
            str(homeo.core.edge_count),
            str(len(keys)),
        ]
        for homeo, keys in groups.items()
    ]
    if output is OutputFormat.CSV:
        _emit_csv([["circles", "core_vertices", "core_edges", "classes"], *rows])
        return
    table = Table(title=f"스펙트럼 위상동형 지문 ({m},{n},{o})")
    for column in ("circles", "core_vertices", "core_edges", "classes"):
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(*row)
    console.print(table)
    typer.echo(f"types={len(groups)} classes={sum(len(k) for k in groups.values())}")


@app.command()  # [CC-H001.5]
def oracle(
    ctx: typer.Context,
    m: MOpt,
    n: NOpt,
    o: OOpt,
    output: OutputOpt = OutputFormat.TEXT,
    force: ForceOpt = False,
) -> None:
    """Sym(m·n·o)의 이중 잉여류를 뒤집기 동일시 없이/있이 셉니다."""
    params = Params(m, n, o)
    guards = _guards(ctx, force)
    try:
        plain = double_coset_classes(params, identify_flip=False, guards=guards)
        flipped = (
            double_coset_classes(params, identify_flip=True, guards=guards) if m == n else None
        )
    except CartanCountError as e:
        raise _fail(e) from e
    with_flip = flipped.count if flipped is not None else None
    if output is OutputFormat.JSON:
        _emit_json(
            {
                "params": params.as_dict(),
                "without_flip": plain.count,
                "with_flip": with_flip,
                "cosets": plain.coset_count,
                "sizes": plain.sizes,
            }
        )
    elif output is OutputFormat.CSV:
        _emit_csv(
            [
                ["m", "n", "o", "without_flip", "with_flip", "cosets"],
                [
                    str(m),
                    str(n),
                    str(o),
                    str(plain.count),
                    "" if with_flip is None else str(with_flip),
                    str(plain.coset_count),
                ],
            ]
        )
    else:
        typer.echo(f"without_flip {plain.count}")
        typer.echo(f"with_flip {'-' if with_flip is None else with_flip}")
        typer.echo(f"cosets {plain.coset_count}")


@app.command()  # [CC-H001.6]
def verify(
    ctx: typer.Context,
    max_n: Annotated[int, typer.Option("--max-n", min=1, help="(2,n,1) 격자 상한")] = 8,
    max_o: Annotated[int, typer.Option("--max-o", min=1, help="(2,2,o) 격자 상한")] = 3,
    output: OutputOpt = OutputFormat.TEXT,
    force: ForceOpt = False,
) -> None:
    """닫힌 공식 검증 표를 출력합니다. FAIL 칸이 있으면 종료 코드 1."""
    config: CartanCountConfig = ctx.obj or CartanCountConfig()
    report = verify_formulas(max_n, max_o, guards=_guards(ctx, force), threads=config.threads)
    if output is OutputFormat.JSON:
        _emit_json(report.model_dump(mode="json"))
    elif output is OutputFormat.CSV:
        _emit_csv(report_to_csv_rows(report))
    else:
        table = Table(title="공식 검증")
        for column in CSV_COLUMNS:
            table.add_column(column)
        for row in report_to_csv_rows(report)[1:]:
            table.add_row(*row)
        console.print(table)
        realized = ", ".join(
            f"{r.target}:{'-' if r.params is None else '({},{},{})'.format(*r.params)}"
            for r in report.realizations
        )
        typer.echo(f"realized {realized}")
    if not report.all_passed:
        raise typer.Exit(1)


@app.command()  # [CC-H001.7]
def dot(
    ctx: typer.Context,
    m: MOpt,
    n: NOpt,
    o: OOpt,
    out_path: Annotated[
        Path | None, typer.Option("--out-path", help="DOT 파일을 쓸 디렉토리 (없으면 stdout)")
    ] = None,
    output: OutputOpt = OutputFormat.TEXT,
    transpose: TransposeOpt = True,
    force: ForceOpt = False,
) -> None:
    """류마다 스펙트럼 그래프 DOT 하나를 만듭니다 (class_001.dot, ...).

    --out-path 가 없으면 DOT 본문을 stdout 으로 내보냅니다.
    """
    report = _report(ctx, (m, n, o), transpose, force, oracle=False)
    sources = []
    graphs = []
    for idx, entry in enumerate(report.classes, start=1):
        graph = graph_from_matrix(entry.key.canonical)
        sources.append((f"class_{idx:03d}", to_dot(graph, name=f"class_{idx:03d}")))
        graphs.append(graph_to_json(graph))
    if out_path is None:
        if output is OutputFormat.JSON:
            _emit_json({"files": [], "graphs": graphs, "dot": [text for _, text in sources]})
        else:
            typer.echo("\n".join(text.rstrip("\n") for _, text in sources))
        return
    out_path.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in sources:
        target = out_path / f"{name}.dot"
        target.write_text(text, encoding="utf-8")
        written.append(target.name)
    logger.info("dot_files_written", directory=str(out_path), files=len(written))
    if output is OutputFormat.JSON:
        _emit_json({"files": written, "graphs": graphs})
    elif output is OutputFormat.CSV:
        _emit_csv([["file"], *([name] for name in written)])
    else:
        for name in written:
            typer.echo(name)


if __name__ == "__main__":
    app()
