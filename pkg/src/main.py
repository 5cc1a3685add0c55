import typer
from command import chain, sample, verify
from package import key, logger
from typing_extensions import Annotated

app = typer.Typer(pretty_exceptions_show_locals=False)
app.command(key.VERIFY_COMMAND_NAME)(verify.verify)
app.add_typer(sample.app, name=key.SAMPLE_UPPER_COMMAND_NAME)
app.add_typer(chain.app, name=key.CHAIN_UPPER_COMMAND_NAME)


@app.callback(invoke_without_command=True, no_args_is_help=True)
def main(log_level: Annotated[str, typer.Option(help="Log level.")] = "INFO"):
    logger.setup(log_level.upper())


if __name__ == "__main__":
    app()
