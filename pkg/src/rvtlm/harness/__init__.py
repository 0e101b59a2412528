"""Program construction, loading, running and the command-line front end."""
