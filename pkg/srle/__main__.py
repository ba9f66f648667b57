if __name__ == '__main__':
    from srle.core.cli import cli
    cli(prog_name='srle')
