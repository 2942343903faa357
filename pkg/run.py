from powerideals import create_cli

# Create the pil command group
cli = create_cli()

if __name__ == "__main__":
    cli()
